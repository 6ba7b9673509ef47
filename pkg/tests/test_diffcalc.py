from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from apseq.diffcalc import (
    APPROXIMATE,
    Sequence,
    certified_order,
    difference,
    interpolation_report,
    iterated_difference,
    monomial_form,
    newton_tableau,
    newton_to_monomial,
    term_value,
)
from apseq.errors import Inconclusive, InputError, InsufficientData, NotAnAP, UnsupportedForm
from apseq.linalg import ExactMatrix, Vector

F = Fraction
EX1 = [2, 1, 2, 5, 10, 17, 26]
EX2 = [1, 5, 5, 7, 17, 41, 85]


def seq(values):
    return Sequence.exact(values)


def sympy_monomial(values):
    n = sympy.Symbol("n")
    poly = sympy.Poly(sympy.interpolate([(i, sympy.Rational(str(v))) for i, v in enumerate(values)], n), n)
    coeffs = [F(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return coeffs


# worked examples ------------------------------------------------------------

def test_difference_example():
    assert difference(seq(EX1[:5])).elements == tuple(map(F, (-1, 1, 3, 5)))
    assert difference(seq([0, 1, 4, 9])).elements == tuple(map(F, (1, 3, 5)))


@pytest.mark.parametrize("mode", ["iterative", "direct"])
def test_second_difference_example(mode):
    assert iterated_difference(seq(EX1[:5]), 2, mode).elements == (2, 2, 2)
    assert iterated_difference(seq([0, 1, 4, 9, 16]), 2, mode).elements == (2, 2, 2)
    s = seq([3, 1, 4])
    assert iterated_difference(s, 0, mode) == s


def test_newton_tableau_example():
    assert newton_tableau(seq(EX1[:5])) == [2, -1, 2, 0, 0]
    assert newton_tableau(seq([7])) == [7]


def test_example_one():
    rep = certified_order(seq(EX1))
    assert rep.certified_order == 2 and rep.strict
    assert rep.monomial.coefficients == (2, -2, 1)
    assert [term_value(rep, 5, f) for f in ("newton", "lagrange", "barycentric")] == [17] * 3


def test_example_two():
    rep = certified_order(seq(EX2))
    assert rep.certified_order == 3 and rep.strict
    assert rep.monomial.coefficients == (1, 8, -5, 1)
    assert rep.horizon == 7 and rep.windows_checked == 3
    rep5 = certified_order(seq(EX2[:5]), h_max=3, min_windows=1)
    assert term_value(rep5, 5) == 41


def test_exponential_not_an_ap():
    with pytest.raises(NotAnAP) as exc:
        certified_order(seq([1, 2, 4, 8, 16, 32]), h_max=4)
    assert exc.value.h_max == 4


def test_inconclusive_when_no_window():
    with pytest.raises(Inconclusive):
        certified_order(seq([1, 2, 4]), h_max=2, min_windows=5)


def test_short_input():
    with pytest.raises(InsufficientData):
        certified_order(seq([1]))
    with pytest.raises(InsufficientData):
        difference(seq([1]))
    with pytest.raises(InsufficientData):
        iterated_difference(seq([1, 2]), 2)


def test_monomial_from_newton_examples():
    assert newton_to_monomial([F(2), F(-1), F(2)]) == (2, -2, 1)
    assert newton_to_monomial([F(5)]) == (5,)
    assert newton_to_monomial([F(0), F(1)]) == (0, 1)


def test_constant_and_zero_sequences():
    rep = certified_order(seq([4] * 6))
    assert rep.certified_order == 0 and rep.strict
    zero = certified_order(seq([0] * 6))
    assert zero.certified_order == 0


def test_integer_kind_has_no_monomial():
    rep = certified_order(Sequence.integers([1, 3, 5, 7]))
    assert rep.monomial is None
    with pytest.raises(UnsupportedForm):
        monomial_form(rep)
    assert term_value(rep, 10) == 21
    assert term_value(rep, 10, "lagrange") == 21


def test_vector_and_matrix_sequences():
    vs = Sequence(tuple(Vector([n, n * n]) for n in range(6)))
    rep = certified_order(vs)
    assert rep.certified_order == 2
    assert term_value(rep, 9) == Vector([9, 81])
    assert term_value(rep, 9, "lagrange") == Vector([9, 81])
    with pytest.raises(UnsupportedForm):
        term_value(rep, 9, "barycentric")
    ms = Sequence(tuple(ExactMatrix([[1, k], [k, 1 + k * k]]) for k in range(6)))
    assert certified_order(ms).certified_order == 2


def test_sequence_validation():
    with pytest.raises(InputError):
        Sequence((F(1), 2.0))
    with pytest.raises(InputError):
        Sequence((1.0, 2.0))  # floats need approximate mode
    with pytest.raises(InputError):
        Sequence((F(1),), APPROXIMATE, 0.0)
    with pytest.raises(InputError):
        Sequence((Vector([1]), Vector([1, 2])))


def test_approximate_mode():
    vals = [0.1 * n * n + 0.3 for n in range(10)]
    rep = certified_order(Sequence.approximate(vals))
    assert rep.certified_order == 2 and rep.mode == APPROXIMATE
    assert abs(rep.monomial.coefficients[2] - 0.1) < 1e-9


# properties -------------------------------------------------------------------

fracs = st.builds(F, st.integers(-50, 50), st.integers(1, 50))


@given(st.lists(fracs, min_size=1, max_size=16), st.data())
def test_modes_agree(values, data):
    h = data.draw(st.integers(0, len(values) - 1))
    s = seq(values)
    assert iterated_difference(s, h, "iterative") == iterated_difference(s, h, "direct")


@given(st.lists(fracs, min_size=1, max_size=16))
def test_newton_reconstruction(values):
    rep = interpolation_report(seq(values))
    assert [term_value(rep, n) for n in range(len(values))] == values


@given(st.lists(fracs, min_size=1, max_size=8))
def test_monomial_matches_sympy_interpolation(values):
    rep = interpolation_report(seq(values))
    got = list(monomial_form(rep).coefficients)
    want = sympy_monomial(values)
    want += [F(0)] * (len(got) - len(want))
    assert got == want


@given(st.lists(fracs, min_size=1, max_size=7), st.integers(0, 3))
def test_forms_agree_on_polynomials(coeffs, extra):
    h = len(coeffs) - 1
    values = [sum(c * n ** i for i, c in enumerate(coeffs)) for n in range(h + 2 + extra)]
    rep = certified_order(seq(values))
    for n in range(0, 3 * len(values) + 1):
        a = term_value(rep, n, "newton")
        assert a == term_value(rep, n, "lagrange") == term_value(rep, n, "barycentric")
        assert a == sum(c * n ** i for i, c in enumerate(coeffs))


@given(st.lists(fracs, min_size=2, max_size=6), st.integers(2, 5))
def test_order_monotone_and_strict(coeffs, extra):
    if coeffs[-1] == 0:
        coeffs[-1] = F(1)
    h = len(coeffs) - 1
    values = [sum(c * n ** i for i, c in enumerate(coeffs)) for n in range(h + 1 + extra)]
    s = seq(values)
    rep = certified_order(s)
    assert rep.certified_order == h and rep.strict
    assert rep.windows_checked == len(values) - h - 1
    assert all(x == 0 for x in iterated_difference(s, h + 2).elements)
    assert rep.monomial.degree == h and rep.monomial.coefficients[h] != 0

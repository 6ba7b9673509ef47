import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apseq.errors import InputError
from apseq.exactnum import (
    GaussianRational,
    binomial,
    falling_skip,
    format_rational,
    format_scalar,
    lagrange_weight,
    lagrange_weight_binomial,
    parse_rational,
    parse_scalar,
    verify_identity,
)

G = GaussianRational


def comb_oracle(n, k):
    if k > n:
        return 0
    return math.factorial(n) // (math.factorial(k) * math.factorial(n - k))


def weight_oracle(n, k, h):
    # (-1)^(h-k) prod_{j != k, j <= h} (n - j) / (k! (h-k)!)
    num = 1
    for j in range(h + 1):
        if j != k:
            num *= n - j
    return Fraction((-1) ** (h - k) * num, math.factorial(k) * math.factorial(h - k))


@pytest.mark.parametrize("n,k,want", [(5, 2, 10), (3, 5, 0), (0, 0, 1), (17, 0, 1), (300, 150, comb_oracle(300, 150))])
def test_binomial_values(n, k, want):
    assert binomial(n, k) == want


def test_binomial_rejects_negative():
    with pytest.raises(InputError):
        binomial(-1, 0)
    with pytest.raises(InputError):
        binomial(3, -2)


def test_pascal_rule_up_to_60():
    for n in range(1, 61):
        for k in range(1, 61):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_threads_agree():
    out = []

    def work():
        out.append([binomial(n, k) for n in range(0, 120) for k in range(0, n + 1, 7)])

    threads = [threading.Thread(target=work) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(o == out[0] for o in out)
    assert out[0] == [comb_oracle(n, k) for n in range(0, 120) for k in range(0, n + 1, 7)]


@pytest.mark.parametrize("k,h", [(0, 0), (1, 1), (2, 5), (3, 3), (0, 4)])
def test_lagrange_weight_at_node_is_one(k, h):
    assert lagrange_weight(k, k, h) == 1


def test_lagrange_weight_forms_agree_example():
    assert lagrange_weight(5, 1, 2) == lagrange_weight_binomial(5, 1, 2) == weight_oracle(5, 1, 2)


def test_lagrange_weight_k_above_h():
    with pytest.raises(InputError):
        lagrange_weight(4, 3, 2)


@given(st.integers(0, 40), st.integers(0, 12), st.data())
def test_lagrange_weight_oracle(n, h, data):
    k = data.draw(st.integers(0, h))
    assert lagrange_weight(n, k, h) == weight_oracle(n, k, h)
    if n > h:
        assert lagrange_weight_binomial(n, k, h) == weight_oracle(n, k, h)


def test_falling_skip_small():
    # 5*4*(3 skipped)*2 for k=2, h=3
    assert falling_skip(5, 2, 3) == 5 * 4 * 2


def test_identity_examples():
    assert 1 - 4 + 6 == binomial(3, 2)
    assert verify_identity("alternating_partial_sum", i=4, j=2)
    assert verify_identity("unity_sum", n=7, h=0)
    assert verify_identity("skipped_sum", n=5, h=2, k=1)


def test_identity_ranges_exhaustive():
    for i in range(1, 41):
        for j in range(i):
            assert verify_identity("alternating_partial_sum", i=i, j=j)
    for n in range(31):
        for h in range(n):
            for k in range(h + 1):
                assert verify_identity("skipped_sum", n=n, h=h, k=k)
        for h in range(31):
            assert verify_identity("unity_sum", n=n, h=h)


def test_identity_bad_name_or_range():
    with pytest.raises(InputError):
        verify_identity("nope", n=1)
    with pytest.raises(InputError):
        verify_identity("skipped_sum", n=2, h=3, k=1)


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-6/4", Fraction(-3, 2)), ("0", Fraction(0)), (" 7/21 ", Fraction(1, 3)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", "a/b", "1/0", ""])
def test_parse_rational_rejects(bad):
    with pytest.raises((InputError, ValueError, ZeroDivisionError)):
        parse_rational(bad)


@pytest.mark.parametrize("value,text", [
    (Fraction(3), "3"), (Fraction(-1, 2), "-1/2"), (G(0, 1), "1i"), (G(Fraction(3, 5), Fraction(-4, 5)), "3/5-4/5i"),
    (G(Fraction(1, 2), 0), "1/2"),
])
def test_format_scalar(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value


def test_format_rational_lowest_terms():
    assert format_rational(Fraction(10, -4)) == "-5/2"


rationals = st.builds(Fraction, st.integers(-500, 500), st.integers(1, 50))
gaussians = st.builds(G, rationals, rationals)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if a != 0:
        assert (b / a) * a == b


@given(gaussians)
def test_gaussian_matches_complex(a):
    z = complex(float(a.re), float(a.im))
    assert abs(complex(float((a * a).re), float((a * a).im)) - z * z) < 1e-6 * (1 + abs(z) ** 2)
    assert a.abs2() == a.re ** 2 + a.im ** 2


@given(gaussians)
def test_format_parse_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


def test_real_gaussian_hashes_like_fraction():
    assert hash(G(Fraction(1, 2), 0)) == hash(Fraction(1, 2))
    assert G(Fraction(1, 2), 0) == Fraction(1, 2)

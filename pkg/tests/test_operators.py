import random
from fractions import Fraction

import pytest

from apseq import generators as gen
from apseq.diffcalc import Sequence, certified_order, iterated_difference
from apseq.errors import HypothesisViolation, InputError
from apseq.exactnum import binomial
from apseq.linalg import ExactMatrix, inverse
from apseq.operators import (
    NO,
    NON_STRICT,
    STRICT,
    beta,
    beta_pair,
    defect,
    inverse_certificate,
    inverse_defect,
    is_m_isometry,
    left_n_inverse_check,
    alternate_inverse_certificate,
    random_vector,
    strict_isometry_order,
    verify_hs_perturbation,
    verify_inverse_perturbation,
)
from oracles import is_zero_matrix, sympy_defect, to_sympy

I2 = ExactMatrix.identity(2)
N = ExactMatrix([[0, 1], [0, 0]])
J2 = I2 + N
R = ExactMatrix([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])


def test_defect_examples():
    assert defect(I2, 1).is_zero()
    assert defect(J2, 3).is_zero()
    assert not beta(J2, 3).is_zero()
    assert defect(R, 1).is_zero()


def test_is_m_isometry_examples():
    assert is_m_isometry(I2, 1) == STRICT
    assert is_m_isometry(J2, 3) == STRICT
    assert is_m_isometry(J2, 4) == NON_STRICT
    assert is_m_isometry(J2, 2) == NO
    for m in range(1, 5):
        assert is_m_isometry(I2 * 2, m) == NO
    with pytest.raises(InputError):
        is_m_isometry(I2, 0)


def test_defect_matches_sympy():
    rng = random.Random(11)
    for _ in range(15):
        T, _ = gen.isometry_family(rng)
        for m in range(1, 5):
            assert to_sympy(defect(T, m)) == sympy_defect(T, m)


def test_defect_is_difference_of_gram_sequence():
    rng = random.Random(3)
    for _ in range(8):
        T = gen.non_isometry(rng, 3)
        grams = Sequence(tuple((T.adjoint() ** k) * (T ** k) for k in range(8)))
        for m in range(7):
            assert iterated_difference(grams, m, "direct").elements[0] == defect(T, m)


def test_left_inverse_examples():
    T = ExactMatrix([[2, 1], [1, 1]])
    assert left_n_inverse_check(inverse(T), T, 1) == STRICT
    assert left_n_inverse_check(J2.adjoint(), J2, 3) == STRICT
    assert left_n_inverse_check(ExactMatrix.zeros(2), T, 1) == NO


def test_hs_examples():
    rep = verify_hs_perturbation(I2, N)
    assert rep.bound == 3 and rep.bound_holds
    assert rep.certificate == N.adjoint() * N and rep.certificate_nonzero and rep.observed_strict
    rep = verify_hs_perturbation(J2, ExactMatrix.zeros(2))
    assert rep.bound == 3 and rep.holds
    RR = R.kron(I2)
    J = ExactMatrix.identity(2).kron(N)
    rep = verify_hs_perturbation(RR, J)
    assert rep.bound == 3 and rep.holds


def test_hs_hypotheses():
    with pytest.raises(HypothesisViolation) as exc:
        verify_hs_perturbation(ExactMatrix([[1, 1], [1, 0]]), N)
    assert set(exc.value.failures) >= {"T strict m-isometry"}


def test_inverse_examples():
    rep = verify_inverse_perturbation(I2, I2, N.adjoint(), N)
    assert rep.bound == 3 and rep.bound_holds
    assert rep.certificate == N.adjoint() * N and rep.observed_strict and rep.holds
    Z = ExactMatrix.zeros(2)
    rep = verify_inverse_perturbation(J2.adjoint(), J2, Z, Z)
    assert rep.bound == 3 and rep.holds


def test_certificate_forms_coincide_when_h_equals_k():
    rng = random.Random(1)
    S, T, P, Q = gen.inverse_instance(rng)
    b = beta_pair(S, T, 2)
    assert inverse_certificate(S, T, P, Q, b, 2, 2) == alternate_inverse_certificate(S, T, P, Q, b, 2, 2)


def test_generated_properties():
    rng = random.Random(99)
    for _ in range(40):
        T, _ = gen.isometry_family(rng)
        m = strict_isometry_order(T)
        assert m is not None and is_m_isometry(T, m) == STRICT
        b = beta(T, m)
        assert b == b.adjoint()
        for _ in range(8):
            x = random_vector(rng, T.dim)
            norms, v, vecs = [], x, []
            for _ in range(m + 1):
                norms.append(v.norm_sq())
                vecs.append((T.adjoint() ** len(vecs)) @ v)
                v = T @ v
            assert sum((-1) ** (m - k) * binomial(m, k) * norms[k] for k in range(m + 1)) == 0
            assert certified_order(Sequence(tuple(vecs)), h_max=m - 1, min_windows=1).certified_order <= m - 1
        for k in range(1, m + 2):
            assert (is_m_isometry(T, k) != NO) == (left_n_inverse_check(T.adjoint(), T, k) != NO)


def test_generated_hs_and_inverse():
    rng = random.Random(7)
    for _ in range(20):
        T, Q = gen.hs_instance(rng)
        rep = verify_hs_perturbation(T, Q)
        assert rep.holds
        assert defect(T + Q, rep.bound).is_zero()
        S, T, P, Q = gen.inverse_instance(rng)
        rep = verify_inverse_perturbation(S, T, P, Q)
        assert rep.holds and not rep.notes
        assert inverse_defect(S + P, T + Q, rep.bound).is_zero()
        assert rep.alternate_certificate_nonzero == rep.certificate_nonzero

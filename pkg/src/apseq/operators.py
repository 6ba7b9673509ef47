"""m-isometries, left n-inverses and their nilpotent perturbations, exactly.

Everything here is polynomial in matrix entries, so all checks run over the
Gaussian rationals with zero tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import ConsistencyError, HypothesisViolation, InputError
from .exactnum import GaussianRational, binomial
from .linalg import ExactMatrix, Vector
from .ringpert import nilpotency_index

NO = "no"
NON_STRICT = "non_strict"
STRICT = "strict"


def alternating_sum(terms: list[ExactMatrix]) -> ExactMatrix:
    """sum_k (-1)^(m-k) C(m,k) terms[k] with m = len(terms) - 1."""
    m = len(terms) - 1
    acc = ExactMatrix.zeros(terms[0].dim)
    for k, t in enumerate(terms):
        c = binomial(m, k) * (-1 if (m - k) % 2 else 1)
        acc = acc + t * c
    return acc


def _gram_powers(S: ExactMatrix, T: ExactMatrix, m: int) -> list[ExactMatrix]:
    out = [ExactMatrix.identity(T.dim)]
    sk, tk = out[0], out[0]
    for _ in range(m):
        sk, tk = sk * S, tk * T
        out.append(sk * tk)
    return out


def defect(T: ExactMatrix, m: int) -> ExactMatrix:
    """sum_{k=0}^m (-1)^(m-k) C(m,k) T*^k T^k."""
    if m < 0:
        raise InputError("defect needs m >= 0")
    return alternating_sum(_gram_powers(T.adjoint(), T, m))


def beta(T: ExactMatrix, m: int) -> ExactMatrix:
    """beta_{m-1}(T) = defect(T, m - 1)."""
    if m < 1:
        raise InputError("beta needs m >= 1")
    return defect(T, m - 1)


def inverse_defect(S: ExactMatrix, T: ExactMatrix, n: int) -> ExactMatrix:
    """sum_{k=0}^n (-1)^(n-k) C(n,k) S^k T^k."""
    if S.dim != T.dim:
        raise InputError("S and T have different dimensions")
    if n < 0:
        raise InputError("n must be nonnegative")
    return alternating_sum(_gram_powers(S, T, n))


def beta_pair(S: ExactMatrix, T: ExactMatrix, n: int) -> ExactMatrix:
    """beta_{n-1}(S, T) = sum_{i<n} (-1)^(n-1-i) C(n-1,i) S^i T^i."""
    if n < 1:
        raise InputError("beta_pair needs n >= 1")
    return inverse_defect(S, T, n - 1)


def random_vector(rng: random.Random, dim: int, complex_entries: bool = True, size: int = 5) -> Vector:
    def entry():
        re = Fraction(rng.randint(-size, size), rng.randint(1, size))
        if not complex_entries:
            return re
        return GaussianRational(re, Fraction(rng.randint(-size, size), rng.randint(1, size)))

    return Vector(entry() for _ in range(dim))


def _spot_check(T: ExactMatrix, m: int, d: ExactMatrix, samples: int, seed: int) -> None:
    # per-vector and inner-product characterizations must agree with d == 0
    rng = random.Random(seed)
    zero = d.is_zero()
    for _ in range(samples):
        x = random_vector(rng, T.dim)
        y = random_vector(rng, T.dim)
        norms = []
        v = x
        for _ in range(m + 1):
            norms.append(v.norm_sq())
            v = T @ v
        per_vector = sum(
            (-1 if (m - k) % 2 else 1) * binomial(m, k) * norms[k] for k in range(m + 1)
        )
        inner = (d @ x).dot(y)
        if zero and (per_vector != 0 or inner != 0):
            raise ConsistencyError("operator identity holds but a vector form fails")


def is_m_isometry(T: ExactMatrix, m: int, samples: int = 8, seed: int = 0) -> str:
    """"strict", "non_strict" or "no"."""
    if m < 1:
        raise InputError("m must be >= 1")
    d = defect(T, m)
    if samples:
        _spot_check(T, m, d, samples, seed)
    if not d.is_zero():
        return NO
    if m == 1 or not beta(T, m).is_zero():
        return STRICT
    return NON_STRICT


def strict_isometry_order(T: ExactMatrix, m_max: int | None = None) -> int | None:
    """Smallest m with defect(T, m) = 0, searched up to m_max (default 2 dim + 1)."""
    if m_max is None:
        m_max = 2 * T.dim + 1
    for m in range(1, m_max + 1):
        if defect(T, m).is_zero():
            return m
    return None


def left_n_inverse_check(S: ExactMatrix, T: ExactMatrix, n: int) -> str:
    """"strict", "non_strict" or "no" for S as a left n-inverse of T."""
    if n < 1:
        raise InputError("n must be >= 1")
    if not inverse_defect(S, T, n).is_zero():
        return NO
    if n == 1 or not beta_pair(S, T, n).is_zero():
        return STRICT
    return NON_STRICT


def strict_inverse_order(S: ExactMatrix, T: ExactMatrix, n_max: int | None = None) -> int | None:
    if n_max is None:
        n_max = 2 * T.dim + 1
    for n in range(1, n_max + 1):
        if inverse_defect(S, T, n).is_zero():
            return n
    return None


@dataclass
class PerturbationReport:
    hypotheses: dict
    base_order: int | None = None
    nilpotent_indices: tuple = ()
    bound: int | None = None
    bound_holds: bool = False
    certificate: Any = None
    certificate_nonzero: bool | None = None
    observed_strict: bool | None = None
    alternate_certificate: Any = None
    alternate_certificate_nonzero: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.bound_holds and self.certificate_nonzero == self.observed_strict


def verify_hs_perturbation(T: ExactMatrix, Q: ExactMatrix, m: int | None = None) -> PerturbationReport:
    """T + Q is a (2n + m - 2)-isometry; strict iff Q*^(n-1) beta_{m-1}(T) Q^(n-1) != 0."""
    if T.dim != Q.dim:
        raise InputError("T and Q have different dimensions")
    found = strict_isometry_order(T) if m is None else m
    n = nilpotency_index(Q)
    hyp = {
        "T strict m-isometry": found is not None and is_m_isometry(T, found, samples=0) == STRICT,
        "Q nilpotent": n is not None,
        "TQ=QT": T.commutes_with(Q),
    }
    failures = [k for k, ok in hyp.items() if not ok]
    if failures:
        raise HypothesisViolation("hs perturbation hypotheses fail: " + ", ".join(failures), failures)
    m = found
    bound = 2 * n + m - 2
    TQ = T + Q
    report = PerturbationReport(hyp, m, (n,), bound)
    report.bound_holds = defect(TQ, bound).is_zero()
    Qs = Q.adjoint()
    cert = (Qs ** (n - 1)) * beta(T, m) * (Q ** (n - 1))
    report.certificate = cert
    report.certificate_nonzero = not cert.is_zero()
    report.observed_strict = bound == 1 or not beta(TQ, bound).is_zero()
    return report


def inverse_certificate(S, T, P, Q, beta_st, h: int, k: int) -> ExactMatrix:
    """Strictness coefficient for S + P as a left inverse of T + Q.

    P^(h-1) beta T^(h-k) Q^(k-1) when k <= h, and P^(h-1) S^(k-h) beta Q^(k-1)
    when h <= k; both agree at h = k.
    """
    if k <= h:
        return (P ** (h - 1)) * beta_st * (T ** (h - k)) * (Q ** (k - 1))
    return (P ** (h - 1)) * (S ** (k - h)) * beta_st * (Q ** (k - 1))


def alternate_inverse_certificate(S, T, P, Q, beta_st, h: int, k: int) -> ExactMatrix:
    # the alternate case split (S power when k <= h), kept for comparison in reports
    if k <= h:
        return (P ** (h - 1)) * (S ** (h - k)) * beta_st * (Q ** (k - 1))
    return (P ** (h - 1)) * beta_st * (T ** (k - h)) * (Q ** (k - 1))


def verify_inverse_perturbation(
    S: ExactMatrix, T: ExactMatrix, P: ExactMatrix, Q: ExactMatrix, n: int | None = None
) -> PerturbationReport:
    """S + P is a left (n + h + k - 2)-inverse of T + Q; strictness by certificate."""
    if len({S.dim, T.dim, P.dim, Q.dim}) != 1:
        raise InputError("S, T, P, Q must share a dimension")
    found = strict_inverse_order(S, T) if n is None else n
    h, k = nilpotency_index(P), nilpotency_index(Q)
    hyp = {
        "S strict left n-inverse of T": found is not None and left_n_inverse_check(S, T, found) == STRICT,
        "P nilpotent": h is not None,
        "Q nilpotent": k is not None,
        "SP=PS": S.commutes_with(P),
        "TQ=QT": T.commutes_with(Q),
    }
    failures = [name for name, ok in hyp.items() if not ok]
    if failures:
        raise HypothesisViolation("inverse perturbation hypotheses fail: " + ", ".join(failures), failures)
    n = found
    bound = n + h + k - 2
    SP, TQ = S + P, T + Q
    report = PerturbationReport(hyp, n, (h, k), bound)
    report.bound_holds = inverse_defect(SP, TQ, bound).is_zero()
    b = beta_pair(S, T, n)
    cert = inverse_certificate(S, T, P, Q, b, h, k)
    report.certificate = cert
    report.certificate_nonzero = not cert.is_zero()
    alt = alternate_inverse_certificate(S, T, P, Q, b, h, k)
    report.alternate_certificate = alt
    report.alternate_certificate_nonzero = not alt.is_zero()
    report.observed_strict = bound == 1 or not beta_pair(SP, TQ, bound).is_zero()
    if report.alternate_certificate_nonzero != report.certificate_nonzero:
        report.notes.append("alternate case split disagrees with the derived certificate")
    return report

"""Progressions (y^k x^k) in a ring and their perturbation by commuting nilpotents.

Ring elements only need ``+``, ``-``, ``*`` (the ring product), ``** k`` for
k >= 0 and a zero test; :class:`~apseq.linalg.ExactMatrix` and
:class:`fractions.Fraction` both qualify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .diffcalc import OrderReport, Sequence, certified_order, is_zero
from .errors import Inconclusive, InputError, HypothesisViolation, NotAnAP
from .linalg import ExactMatrix


def _dim(a) -> int:
    return a.dim if isinstance(a, ExactMatrix) else 1


def nilpotency_index(a) -> int | None:
    """Smallest n with a^n = 0, or None when a^dim is still nonzero."""
    p = a ** 0
    for n in range(1, _dim(a) + 1):
        p = p * a
        if is_zero(p):
            return n
    return None


def power_product_seq(y, x, horizon: int) -> Sequence:
    """(y^k x^k) for k < horizon, as an exact sequence."""
    if isinstance(y, ExactMatrix) and isinstance(x, ExactMatrix) and y.dim != x.dim:
        raise InputError("y and x have different dimensions")
    out = []
    yk, xk = y ** 0, x ** 0
    for _ in range(horizon):
        out.append(yk * xk)
        yk, xk = yk * y, xk * x
    return Sequence(tuple(out))


def extract_c_h(report: OrderReport):
    """Leading monomial coefficient c_h = D^h a_0 / h! of a strict progression."""
    if report.certified_order is None or not report.strict:
        raise InputError("extract_c_h needs a report certifying a strict order")
    h = report.certified_order
    return report.leading / math.factorial(h)


def perturbation_certificate(y, x, a, b, c_h, n: int, m: int):
    """Coefficient that decides strictness at order n + m + h - 2.

    b^(m-1) y^(n-m) c_h a^(n-1) when m <= n, and b^(m-1) c_h x^(m-n) a^(n-1)
    when m > n.  Exponents are never negative.
    """
    if m <= n:
        return (b ** (m - 1)) * (y ** (n - m)) * c_h * (a ** (n - 1))
    return (b ** (m - 1)) * c_h * (x ** (m - n)) * (a ** (n - 1))


@dataclass
class RingPerturbationReport:
    hypotheses: dict
    base_order: int | None = None
    a_index: int | None = None
    b_index: int | None = None
    bound: int | None = None
    perturbed_order: int | None = None
    certificate: Any = None
    certificate_nonzero: bool | None = None
    observed_strict: bool | None = None
    corollary_certificate: Any = None
    corollary_certificate_nonzero: bool | None = None
    holds: bool = False
    prediction_correct: bool | None = None
    notes: list = field(default_factory=list)


def verify_ring_perturbation(y, x, a, b, horizon: int, min_windows: int = 1) -> RingPerturbationReport:
    """Check that ((y+b)^k (x+a)^k) has order <= n + m + h - 2.

    Hypotheses are always checked: ax = xa, by = yb, a and b nilpotent, and
    (y^k x^k) of strict order h on the horizon.  Raises HypothesisViolation
    listing every failed hypothesis and Inconclusive when the horizon is
    shorter than n + m + h + min_windows.
    """
    hyp = {
        "ax=xa": a * x == x * a,
        "by=yb": b * y == y * b,
    }
    n, m = nilpotency_index(a), nilpotency_index(b)
    hyp["a nilpotent"] = n is not None
    hyp["b nilpotent"] = m is not None
    base = power_product_seq(y, x, horizon)
    base_report = None
    try:
        base_report = certified_order(base, min_windows=min_windows)
        hyp["(y^k x^k) strict"] = base_report.strict
    except NotAnAP:
        hyp["(y^k x^k) strict"] = False
    failures = [k for k, ok in hyp.items() if not ok]
    if failures:
        raise HypothesisViolation("ring perturbation hypotheses fail: " + ", ".join(failures), failures)
    h = base_report.certified_order
    bound = n + m + h - 2
    if horizon < n + m + h + min_windows:
        raise Inconclusive(f"horizon {horizon} < n+m+h+min_windows = {n + m + h + min_windows}")
    report = RingPerturbationReport(hyp, h, n, m, bound)
    c_h = extract_c_h(base_report)
    cert = perturbation_certificate(y, x, a, b, c_h, n, m)
    report.certificate = cert
    report.certificate_nonzero = not is_zero(cert)
    if m == 1 and (y ** 0) == y:
        # the corollary's form, a^(n-1) c_h x^(n-1)
        cor = (a ** (n - 1)) * c_h * (x ** (n - 1))
        report.corollary_certificate = cor
        report.corollary_certificate_nonzero = not is_zero(cor)
        if report.corollary_certificate_nonzero != report.certificate_nonzero:
            report.notes.append("corollary certificate disagrees with the general certificate")
    perturbed = power_product_seq(y + b, x + a, horizon)
    try:
        rep = certified_order(perturbed, bound, min_windows)
    except NotAnAP:
        report.holds = False
        report.notes.append(f"perturbed sequence exceeds order {bound}")
        return report
    report.perturbed_order = rep.certified_order
    report.observed_strict = rep.certified_order == bound
    report.holds = True
    report.prediction_correct = report.observed_strict == report.certificate_nonzero
    return report

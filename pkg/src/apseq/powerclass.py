"""Powers of positive sequences and their proper-order classification.

Integer powers of exact data stay exact.  Any other power is computed in
floating point and analyzed in approximate mode (default relative tolerance
1e-9).  A ``NeverAP`` verdict only covers the candidate exponents, ``h_max``
and horizon it was computed with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .diffcalc import (
    APPROXIMATE,
    DEFAULT_TOLERANCE,
    EXACT,
    OrderReport,
    Sequence,
    certified_order,
)
from .errors import (
    ConsistencyError,
    HypothesisViolation,
    Inconclusive,
    InputError,
    NotAnAP,
)
from .exactnum import binomial, format_rational, parse_rational

NEVER_AP = "NeverAP"
CONSTANT = "Constant"
PROPER = "Proper"


def as_exponent(q) -> Fraction:
    if isinstance(q, float):
        q = Fraction(q).limit_denominator(10**6)
    q = parse_rational(q) if not isinstance(q, Fraction) else q
    if q <= 0:
        raise InputError(f"exponent must be positive, got {q}")
    return q


@dataclass(frozen=True)
class PositiveSequence(Sequence):
    """Sequence of positive scalars (Fractions in exact mode, floats otherwise)."""

    def __post_init__(self):
        super().__post_init__()
        if self.kind not in ("integer", "rational", "float"):
            raise InputError(f"positive sequences hold real scalars, not {self.kind}")
        if any(v <= 0 for v in self.elements):
            raise InputError("positive sequence has a nonpositive value")

    @classmethod
    def from_sequence(cls, seq: Sequence) -> "PositiveSequence":
        return cls(seq.elements, seq.mode, seq.tolerance)


def power_values(seq: Sequence, q, tolerance: float = DEFAULT_TOLERANCE) -> Sequence:
    """Elementwise q-th power of a nonnegative sequence (zeros allowed)."""
    q = as_exponent(q)
    if any(v < 0 for v in seq.elements):
        raise InputError("powers need nonnegative values")
    if seq.mode == EXACT and q.denominator == 1:
        return Sequence(tuple(Fraction(v) ** q.numerator for v in seq.elements))
    tol = seq.tolerance if seq.mode == APPROXIMATE else tolerance
    qf = float(q)
    return Sequence(tuple(float(v) ** qf for v in seq.elements), APPROXIMATE, tol)


def power_seq(a: Sequence, q, tolerance: float = DEFAULT_TOLERANCE) -> PositiveSequence:
    """a^q; exact only for integer q on exact data, approximate otherwise."""
    return PositiveSequence.from_sequence(power_values(PositiveSequence.from_sequence(a), q, tolerance))


@dataclass(frozen=True)
class Monotonicity:
    kind: str  # "constant" or "increasing_from"
    n0: int | None = None


def eventual_monotonicity(report: OrderReport) -> Monotonicity:
    """Index n0 from which the fitted polynomial never decreases.

    Raises HypothesisViolation when the leading coefficient is negative:
    such a prefix cannot extend to a positive progression.
    """
    h = report.certified_order
    if h is None:
        raise InputError("report carries no certified order")
    if report.monomial is None:
        raise InputError("eventual_monotonicity needs a monomial form")
    coeffs = list(report.monomial.coefficients)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg == 0:
        return Monotonicity("constant")
    if coeffs[-1] < 0:
        raise HypothesisViolation("negative leading coefficient", ["positive leading coefficient"])
    # p(n+1) - p(n) = sum_j gamma_j sum_{i<j} C(j,i) n^i
    delta = [coeffs[0] * 0] * deg
    for j in range(1, deg + 1):
        for i in range(j):
            delta[i] = delta[i] + coeffs[j] * binomial(j, i)
    lead = delta[-1]
    bound = 1 + max((abs(c / lead) for c in delta[:-1]), default=0)
    last_negative = -1
    for n in range(math.ceil(bound) + 1):
        value = delta[-1]
        for c in reversed(delta[:-1]):
            value = value * n + c
        if value < 0:
            last_negative = n
    return Monotonicity("increasing_from", last_negative + 1)


def consistency_rk_hq(q, k: int, r, h: int) -> bool:
    """r*k == h*q, exactly."""
    return as_exponent(r) * k == h * as_exponent(q)


def reduce_gcd(q, k: int, r, h: int) -> tuple[Fraction, int]:
    """(t, d) with d = gcd(k, h) and t = q d / k = r d / h."""
    if k < 1 or h < 1:
        raise InputError("reduce_gcd needs k, h >= 1")
    q, r = as_exponent(q), as_exponent(r)
    if not consistency_rk_hq(q, k, r, h):
        raise InputError(f"inconsistent pairs: {r}*{k} != {h}*{q}")
    d = math.gcd(k, h)
    t = q * d / k
    if t != r * d / h:
        raise ConsistencyError("q d / k and r d / h disagree")
    return t, d


def combine(q, k: int, r, h: int) -> tuple[Fraction, int]:
    """Predicted (exponent, strict order) of a^(q+r) from a^q and a^r."""
    return as_exponent(q) + as_exponent(r), k + h


@dataclass(frozen=True)
class PowerClassification:
    variant: str
    s: Fraction | None = None
    ell: int | None = None
    evidence: tuple = ()  # (q, strict order, mode)
    candidates: tuple = ()
    h_max: int | None = None
    horizon: int = 0
    inconclusive: tuple = field(default=())

    def to_dict(self) -> dict:
        out = {
            "variant": self.variant,
            "evidence": [
                {"q": format_rational(q), "order": h, "mode": mode} for q, h, mode in self.evidence
            ],
            "qualifiers": {
                "candidates": [format_rational(q) for q in self.candidates],
                "h_max": self.h_max,
                "horizon": self.horizon,
                "inconclusive": [format_rational(q) for q in self.inconclusive],
            },
        }
        if self.variant == PROPER:
            out["proper"] = {"s": format_rational(self.s), "l": self.ell}
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "PowerClassification":
        qual = d["qualifiers"]
        proper = d.get("proper")
        return cls(
            variant=d["variant"],
            s=parse_rational(proper["s"]) if proper else None,
            ell=proper["l"] if proper else None,
            evidence=tuple((parse_rational(e["q"]), e["order"], e["mode"]) for e in d["evidence"]),
            candidates=tuple(parse_rational(q) for q in qual["candidates"]),
            h_max=qual["h_max"],
            horizon=qual["horizon"],
            inconclusive=tuple(parse_rational(q) for q in qual["inconclusive"]),
        )


def _is_constant(a: Sequence, tol: float) -> bool:
    vals = a.elements
    if a.mode == EXACT:
        return all(v == vals[0] for v in vals)
    hi, lo = max(vals), min(vals)
    return hi - lo <= tol * hi


def classify(
    a: Sequence,
    candidates: Iterable,
    h_max: int | None = None,
    tol: float = DEFAULT_TOLERANCE,
    min_windows: int = 1,
) -> PowerClassification:
    """Constant, Proper(s, l) or NeverAP, from the powers a^q for each candidate q."""
    a = PositiveSequence.from_sequence(a)
    qs = sorted({as_exponent(q) for q in candidates})
    if not qs:
        raise InputError("classify needs at least one candidate exponent")
    common = dict(candidates=tuple(qs), h_max=h_max, horizon=len(a))
    if _is_constant(a, a.tolerance or tol):
        return PowerClassification(CONSTANT, **common)
    evidence, inconclusive = [], []
    for q in qs:
        b = power_seq(a, q, tol)
        try:
            rep = certified_order(b, h_max, min_windows)
        except NotAnAP:
            continue
        except Inconclusive:
            inconclusive.append(q)
            continue
        evidence.append((q, rep.certified_order, b.mode))
    if not evidence:
        return PowerClassification(NEVER_AP, inconclusive=tuple(inconclusive), **common)
    if any(h == 0 for _, h, _ in evidence):
        raise ConsistencyError("a non-constant sequence had a constant power; check the tolerance")
    s, ell = evidence[0][0], evidence[0][1]
    for q, h, _ in evidence[1:]:
        if not consistency_rk_hq(s, ell, q, h):
            raise ConsistencyError(f"evidence ({q}, {h}) contradicts ({s}, {ell}): r k != h q")
        s, ell = reduce_gcd(s, ell, q, h)
    for q, h, _ in evidence:
        k = q / s
        if k.denominator != 1 or h != k * ell:
            raise ConsistencyError(f"evidence ({q}, {h}) is not a multiple of ({s}, {ell})")
    return PowerClassification(
        PROPER, s, ell, tuple(evidence), inconclusive=tuple(inconclusive), **common
    )


def pi_sets(cls: PowerClassification, h_max: int, k_max: int) -> dict:
    """Truncated listings of the order/exponent sets pi(a) and pi_hat(a).

    Pairs are (order, exponent).  For a constant sequence the exponent range
    is the whole half-line and is reported symbolically.
    """
    if cls.variant == NEVER_AP:
        return {"pi_hat": [], "pi": []}
    if cls.variant == CONSTANT:
        return {
            "pi_hat": {"orders": [0], "exponents": "(0,inf)"},
            "pi": {"orders": list(range(h_max + 1)), "exponents": "(0,inf)"},
        }
    s, ell = cls.s, cls.ell
    pi_hat = [(k * ell, k * s) for k in range(1, k_max + 1)]
    pi = [(h, k * s) for k in range(1, k_max + 1) for h in range(k * ell, h_max + 1)]
    return {"pi_hat": pi_hat, "pi": pi}

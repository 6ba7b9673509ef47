"""Structural operations on arithmetic progressions.

Shifts, prefix sums, subsequences by steps, decimation, the diagonal of a
double sequence, and the characteristic polynomial gcd used to refine two
decimated progressions into one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .diffcalc import OrderReport, Sequence, certified_order, is_zero
from .errors import (
    ConsistencyError,
    HypothesisViolation,
    Inconclusive,
    InputError,
    InsufficientData,
    NotAnAP,
)
from .exactnum import binomial


def shift(seq: Sequence, k: int) -> Sequence:
    """(a_k, a_{k+1}, ...)."""
    if k < 1:
        raise InputError("shift needs k >= 1")
    if k >= len(seq):
        raise InsufficientData(f"cannot shift a prefix of length {len(seq)} by {k}")
    return seq.with_elements(seq.elements[k:])


def prefix_sums(seq: Sequence) -> Sequence:
    """A_n = a_0 + ... + a_n."""
    out = []
    acc = None
    for x in seq.elements:
        acc = x if acc is None else acc + x
        out.append(acc)
    return seq.with_elements(out)


def _step_values(steps) -> list[int]:
    values = list(steps.elements if isinstance(steps, Sequence) else steps)
    out = []
    for s in values:
        if isinstance(s, Fraction):
            if s.denominator != 1:
                raise InputError("steps must be integers")
            s = s.numerator
        if not isinstance(s, int) or isinstance(s, bool):
            raise InputError("steps must be integers")
        out.append(s)
    return out


def subsequence_by_steps(seq: Sequence, steps) -> Sequence:
    """b_n = a_{g_n} with g_n = s_0 + ... + s_n.

    ``steps`` is a sequence (or iterable) of integers, s_0 >= 0 and s_n >= 1
    afterwards.  Every index g_n must fall inside the prefix.
    """
    values = _step_values(steps)
    if not values:
        raise InsufficientData("no steps given")
    if values[0] < 0 or any(s < 1 for s in values[1:]):
        raise InputError("steps must satisfy s_0 >= 0 and s_n >= 1 for n >= 1")
    g = 0
    out = []
    for s in values:
        g += s
        if g >= len(seq):
            raise InsufficientData(f"index {g} beyond the prefix of length {len(seq)}")
        out.append(seq.elements[g])
    return seq.with_elements(out)


def decimate(seq: Sequence, d: int) -> Sequence:
    """(a_0, a_d, a_{2d}, ...)."""
    if d < 1:
        raise InputError("decimation step must be >= 1")
    if len(seq) <= d and d > 1:
        raise InsufficientData(f"prefix of length {len(seq)} too short to decimate by {d}")
    return seq.with_elements(seq.elements[::d])


@dataclass(frozen=True)
class DoubleSequence:
    """Square grid a[i][j] of group elements; rows vary j, columns vary i."""

    grid: tuple
    mode: str = "exact"
    tolerance: float = 0.0

    def __post_init__(self):
        grid = tuple(tuple(r) for r in self.grid)
        n = len(grid)
        if n == 0 or any(len(r) != n for r in grid):
            raise InputError("double sequence grid must be square and nonempty")
        object.__setattr__(self, "grid", grid)
        # homogeneity is enforced by Sequence
        Sequence(tuple(x for r in grid for x in r), self.mode, self.tolerance)

    @classmethod
    def exact(cls, grid) -> "DoubleSequence":
        return cls(tuple(Sequence.exact(r).elements for r in grid))

    @property
    def size(self) -> int:
        return len(self.grid)

    def row(self, i: int) -> Sequence:
        return Sequence(self.grid[i], self.mode, self.tolerance)

    def column(self, j: int) -> Sequence:
        return Sequence(tuple(r[j] for r in self.grid), self.mode, self.tolerance)


@dataclass(frozen=True)
class DiagonalReport:
    row_order: int
    column_order: int
    bound: int
    diagonal: Sequence
    diagonal_order: int
    strict_at_bound: bool
    windows_checked: int
    holds: bool


def diagonal(dseq: DoubleSequence, h_max: int | None = None, min_windows: int = 1) -> DiagonalReport:
    """Certify that the diagonal a_{i,i} has order <= k + h.

    k is the largest certified row order and h the largest certified column
    order.  Any row or column that fails to certify is a hypothesis violation.
    """
    n = dseq.size
    failures = []
    row_orders, col_orders = [], []
    for i in range(n):
        for label, seq, store in (("row", dseq.row(i), row_orders), ("column", dseq.column(i), col_orders)):
            try:
                store.append(certified_order(seq, h_max, min_windows).certified_order)
            except (NotAnAP, Inconclusive):
                failures.append(f"{label} {i}")
    if failures:
        raise HypothesisViolation(
            "rows/columns of the grid are not certified arithmetic progressions: " + ", ".join(failures),
            failures,
        )
    k, h = max(row_orders), max(col_orders)
    bound = k + h
    diag = Sequence(tuple(dseq.grid[i][i] for i in range(n)), dseq.mode, dseq.tolerance)
    if n < bound + 1 + min_windows:
        raise Inconclusive(f"diagonal of length {n} too short to certify order {bound}")
    try:
        rep = certified_order(diag, bound, min_windows)
    except NotAnAP:
        return DiagonalReport(k, h, bound, diag, -1, False, n - bound - 1, False)
    return DiagonalReport(
        row_order=k,
        column_order=h,
        bound=bound,
        diagonal=diag,
        diagonal_order=rep.certified_order,
        strict_at_bound=rep.certified_order == bound and rep.strict,
        windows_checked=n - bound - 1,
        holds=True,
    )


def factorial_weighted_sum(seq: Sequence, h: int, n: int, ell: int):
    """sum_{i=0}^{h+n} C(h+n,i) (-1)^(h+n+1-i) i(i-1)...(i-ell) a_i.

    Zero whenever ``seq`` is an AP of order h, 2 <= n and ell <= n-2.
    """
    top = h + n
    if len(seq) <= top:
        raise InsufficientData(f"need {top + 1} terms")
    acc = seq.elements[0] * 0
    for i in range(top + 1):
        falling = 1
        for j in range(ell + 1):
            falling *= i - j
        c = binomial(top, i) * falling * (-1 if (top + 1 - i) % 2 else 1)
        if c:
            acc = acc + c * seq.elements[i]
    return acc


# --- characteristic polynomials ------------------------------------------


@dataclass(frozen=True)
class CharPolynomial:
    """Dense rational polynomial, ascending degree.

    ``factored = (c, mult)`` records that the polynomial is (z^c - 1)^mult.
    """

    coefficients: tuple
    factored: tuple | None = None

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))
        if self.factored is not None:
            c, mult = self.factored
            if _dense_power_binomial(c, mult) != self.coefficients:
                raise ConsistencyError("factored tag does not match coefficients")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def monic(self) -> "CharPolynomial":
        lead = self.coefficients[-1]
        return CharPolynomial(tuple(c / lead for c in self.coefficients), self.factored)

    def __eq__(self, other):
        if not isinstance(other, CharPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)


def _dense_power_binomial(c: int, mult: int) -> tuple:
    coeffs = [Fraction(0)] * (c * mult + 1)
    for j in range(mult + 1):
        coeffs[c * j] = Fraction((-1) ** (mult - j) * binomial(mult, j))
    return tuple(coeffs)


def char_poly(c: int, h: int) -> CharPolynomial:
    """(z^c - 1)^(h+1)."""
    if c < 1 or h < 0:
        raise InputError("char_poly needs c >= 1 and h >= 0")
    return CharPolynomial(_dense_power_binomial(c, h + 1), (c, h + 1))


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        f = a[-1] / lead
        shift_by = len(a) - 1 - db
        for i in range(db + 1):
            a[shift_by + i] -= f * b[i]
        a.pop()
        while len(a) > 1 and a[-1] == 0:
            a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [Fraction(0)]


def poly_gcd(p: CharPolynomial, q: CharPolynomial) -> CharPolynomial:
    """Monic gcd over Q by the Euclidean algorithm."""
    if p.is_zero() or q.is_zero():
        raise InputError("poly_gcd needs nonzero polynomials")
    a, b = list(p.coefficients), list(q.coefficients)
    while any(b):
        a, b = b, _poly_rem(a, b)
    lead = a[-1]
    return CharPolynomial(tuple(x / lead for x in a))


def gcd_refine(c: int, h: int, d: int, k: int) -> tuple[int, int]:
    """(gcd(c, d), min(h, k)), certified by the characteristic polynomial gcd.

    If (a_{cn}) has strict order h and (a_{dn}) strict order k, then
    (a_{en}) has strict order l for the returned (e, l).
    """
    if c < 1 or d < 1 or h < 0 or k < 0:
        raise InputError("gcd_refine needs c, d >= 1 and h, k >= 0")
    e, ell = math.gcd(c, d), min(h, k)
    if poly_gcd(char_poly(c, h), char_poly(d, k)) != char_poly(e, ell):
        raise ConsistencyError(f"characteristic gcd certificate failed for {(c, h, d, k)}")
    return e, ell


def subsequence_orders(seq: Sequence, c: int, d: int, min_windows: int = 1) -> dict:
    """Certify (a_{cn}), (a_{dn}) and (a_{en}) on the prefix and compare with gcd_refine."""
    rep_c = certified_order(decimate(seq, c), min_windows=min_windows)
    rep_d = certified_order(decimate(seq, d), min_windows=min_windows)
    e, ell = gcd_refine(c, rep_c.certified_order, d, rep_d.certified_order)
    rep_e = certified_order(decimate(seq, e), min_windows=min_windows)
    return {
        "c": c, "h": rep_c.certified_order, "d": d, "k": rep_d.certified_order,
        "e": e, "l": ell, "observed": rep_e.certified_order,
        "holds": rep_e.certified_order == ell,
    }


__all__ = [
    "CharPolynomial",
    "DiagonalReport",
    "DoubleSequence",
    "char_poly",
    "decimate",
    "diagonal",
    "factorial_weighted_sum",
    "gcd_refine",
    "is_zero",
    "poly_gcd",
    "prefix_sums",
    "shift",
    "subsequence_by_steps",
    "subsequence_orders",
]

"""Difference operator, order certification on finite prefixes, general-term forms.

A :class:`Sequence` is a finite prefix ``a_0 .. a_{N-1}`` of a sequence in a
commutative group.  Supported element kinds:

``integer``   Python ints; the group Z, which is not divisible, so no monomial form
``rational``  Fractions
``gaussian``  Fractions mixed with :class:`~apseq.exactnum.GaussianRational`
``float``     doubles; always approximate mode with a positive tolerance
``vector``    :class:`~apseq.linalg.Vector`
``matrix``    :class:`~apseq.linalg.ExactMatrix`

"Certified order h" only speaks about the available horizon: ``D^{h+1}``
vanishes on every window the prefix provides, and at least ``min_windows``
such windows exist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from . import kernels
from .errors import (
    Inconclusive,
    InputError,
    InsufficientData,
    NotAnAP,
    UnsupportedForm,
)
from .exactnum import GaussianRational, binomial, lagrange_weight, parse_scalar
from .linalg import ExactMatrix, Vector

EXACT = "exact"
APPROXIMATE = "approximate"
DEFAULT_TOLERANCE = 1e-9

SCALAR_KINDS = frozenset({"integer", "rational", "gaussian", "float"})
DIVISIBLE_KINDS = frozenset({"rational", "gaussian", "float", "vector", "matrix"})


def element_kind(x) -> str:
    if isinstance(x, bool):
        raise InputError("booleans are not group elements")
    if isinstance(x, int):
        return "integer"
    if isinstance(x, Fraction):
        return "rational"
    if isinstance(x, GaussianRational):
        return "gaussian"
    if isinstance(x, float):
        return "float"
    if isinstance(x, Vector):
        return "vector"
    if isinstance(x, ExactMatrix):
        return "matrix"
    raise InputError(f"unsupported group element {x!r}")


def _shape(x):
    if isinstance(x, Vector):
        return len(x)
    if isinstance(x, ExactMatrix):
        return x.dim
    return None


def is_zero(x) -> bool:
    if isinstance(x, (Vector, ExactMatrix)):
        return x.is_zero()
    return x == 0


def magnitude(x) -> float:
    if isinstance(x, Vector):
        return max((abs(a) for a in x), default=0.0)
    if isinstance(x, ExactMatrix):
        return float(x.max_abs())
    return float(abs(x))


@dataclass(frozen=True)
class Sequence:
    elements: tuple
    mode: str = EXACT
    tolerance: float = 0.0
    kind: str = field(default="", compare=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise InsufficientData("empty sequence")
        kinds = {element_kind(x) for x in elements}
        if kinds <= {"rational", "gaussian"} and "gaussian" in kinds:
            kind = "gaussian"
        elif len(kinds) == 1:
            kind = kinds.pop()
        else:
            raise InputError(f"mixed element kinds {sorted(kinds)}")
        if len({_shape(x) for x in elements}) != 1:
            raise InputError("elements have different shapes")
        object.__setattr__(self, "kind", kind)
        if self.mode not in (EXACT, APPROXIMATE):
            raise InputError(f"unknown mode {self.mode!r}")
        if self.tolerance < 0:
            raise InputError("tolerance must be nonnegative")
        if (self.tolerance == 0) != (self.mode == EXACT):
            raise InputError("tolerance is 0 exactly when the mode is exact")
        if (kind == "float") != (self.mode == APPROXIMATE):
            raise InputError("float elements need approximate mode and vice versa")

    @classmethod
    def exact(cls, values: Iterable) -> "Sequence":
        """Exact sequence; ints and strings become Fractions."""
        out = []
        for v in values:
            if isinstance(v, (str, int)) and not isinstance(v, bool):
                v = parse_scalar(v) if isinstance(v, str) else Fraction(v)
            out.append(v)
        return cls(tuple(out))

    @classmethod
    def integers(cls, values: Iterable[int]) -> "Sequence":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def approximate(cls, values: Iterable, tolerance: float = DEFAULT_TOLERANCE) -> "Sequence":
        return cls(tuple(float(v) for v in values), APPROXIMATE, tolerance)

    def with_elements(self, elements: Iterable) -> "Sequence":
        return Sequence(tuple(elements), self.mode, self.tolerance)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    @property
    def divisible(self) -> bool:
        return self.kind in DIVISIBLE_KINDS


@dataclass(frozen=True)
class PolynomialForm:
    """a_n = coefficients[0] + coefficients[1] n + ... + coefficients[h] n^h."""

    coefficients: tuple

    @property
    def degree(self) -> int:
        for i in range(len(self.coefficients) - 1, -1, -1):
            if not is_zero(self.coefficients[i]):
                return i
        return 0

    def __call__(self, n):
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * n + c
        return acc


@dataclass(frozen=True)
class OrderReport:
    horizon: int
    certified_order: int | None
    windows_checked: int
    strict: bool
    newton_coeffs: tuple
    leading: Any
    monomial: PolynomialForm | None
    nodes: tuple
    kind: str
    mode: str = EXACT
    tolerance: float = 0.0


def _rows(seq: Sequence, depth: int) -> list[list]:
    if seq.kind == "float":
        return kernels.difference_rows_float(seq.elements, depth)
    return kernels.difference_rows(seq.elements, depth)


def difference(seq: Sequence) -> Sequence:
    """(a_1 - a_0, ..., a_{N-1} - a_{N-2})."""
    if len(seq) < 2:
        raise InsufficientData("difference needs at least two terms")
    return seq.with_elements(_rows(seq, 1)[1])


def iterated_difference(seq: Sequence, h: int, mode: str = "iterative") -> Sequence:
    """D^h applied to the prefix.

    ``mode="iterative"`` repeats :func:`difference`; ``mode="direct"`` uses the
    alternating binomial sum.  Both give identical results.
    """
    if h < 0:
        raise InputError("h must be nonnegative")
    if len(seq) <= h:
        raise InsufficientData(f"D^{h} needs at least {h + 1} terms, have {len(seq)}")
    if mode == "iterative":
        return seq.with_elements(_rows(seq, h)[h])
    if mode == "direct":
        return seq.with_elements(kernels.direct_difference(list(seq.elements), h))
    raise InputError(f"unknown difference mode {mode!r}")


def newton_tableau(seq: Sequence) -> list:
    """(D^0 a_0, D^1 a_0, ..., D^{N-1} a_0)."""
    return kernels.leading_column(seq.elements)


def _stirling_first(kmax: int) -> list[list[int]]:
    # signed Stirling numbers s(k, j): n(n-1)...(n-k+1) = sum_j s(k, j) n^j
    s = [[1]]
    for k in range(kmax):
        prev = s[-1] + [0]
        row = [0] * (k + 2)
        for j in range(k + 2):
            row[j] = (prev[j - 1] if j else 0) - k * prev[j]
        s.append(row)
    return s


def newton_to_monomial(newton: list | tuple) -> tuple:
    """Monomial coefficients of sum_k C(n,k) newton[k]."""
    h = len(newton) - 1
    stirling = _stirling_first(h)
    zero = newton[0] * 0
    gammas = []
    for j in range(h + 1):
        acc = zero
        for k in range(j, h + 1):
            s = stirling[k][j]
            if s:
                acc = acc + newton[k] * Fraction(s, math.factorial(k))
        gammas.append(acc)
    return tuple(gammas)


def _approx_zero(value, window, order: int, tol: float) -> bool:
    scale = sum(binomial(order, k) * magnitude(window[k]) for k in range(order + 1))
    return magnitude(value) <= tol * scale


def _build_report(seq: Sequence, rows: list[list], h: int) -> OrderReport:
    n = len(seq)
    newton = tuple(rows[k][0] for k in range(h + 1))
    leading = newton[h]
    if seq.mode == EXACT:
        leading_zero = is_zero(leading)
    else:
        leading_zero = _approx_zero(leading, seq.elements, h, seq.tolerance)
    monomial = PolynomialForm(newton_to_monomial(newton)) if seq.divisible else None
    return OrderReport(
        horizon=n,
        certified_order=h,
        windows_checked=n - h - 1,
        strict=h == 0 or not leading_zero,
        newton_coeffs=newton,
        leading=leading,
        monomial=monomial,
        nodes=tuple(seq.elements[: h + 1]),
        kind=seq.kind,
        mode=seq.mode,
        tolerance=seq.tolerance,
    )


def certified_order(seq: Sequence, h_max: int | None = None, min_windows: int = 1) -> OrderReport:
    """Smallest h <= h_max with D^{h+1} vanishing on every available window.

    Raises :class:`Inconclusive` when no candidate h leaves ``min_windows``
    windows, and :class:`NotAnAP` when every checkable h fails.
    """
    n = len(seq)
    if n < 2:
        raise InsufficientData("order certification needs at least two terms")
    if min_windows < 0:
        raise InputError("min_windows must be nonnegative")
    if h_max is None:
        h_max = n - 1 - max(min_windows, 1)
    if h_max < 0:
        raise Inconclusive(f"horizon {n} too short for min_windows={min_windows}")
    depth = min(h_max + 1, n - 1)
    rows = _rows(seq, depth)
    last_checked = None
    for h in range(h_max + 1):
        windows = n - h - 1
        if windows < max(min_windows, 1) and not (min_windows == 0 and h == n - 1):
            break
        last_checked = h
        if h + 1 > depth:
            # only reachable with min_windows=0: the interpolant of all N terms
            return _build_report(seq, rows, h)
        row = rows[h + 1]
        if seq.mode == EXACT:
            vanishes = all(is_zero(x) for x in row)
        else:
            vanishes = kernels.float_row_vanishes(seq.elements, row, h + 1, seq.tolerance)
        if vanishes:
            return _build_report(seq, rows, h)
    if last_checked is None:
        raise Inconclusive(
            f"horizon {n} leaves fewer than {min_windows} window(s) for every order <= {h_max}"
        )
    raise NotAnAP(h_max, last_checked, n)


def interpolation_report(seq: Sequence) -> OrderReport:
    """Report for the interpolating polynomial of the whole prefix.

    Always succeeds: order N-1 needs no vanishing window.
    """
    if len(seq) == 1:
        x = seq.elements[0]
        return OrderReport(1, 0, 0, True, (x,), x,
                           PolynomialForm((x,)) if seq.divisible else None,
                           (x,), seq.kind, seq.mode, seq.tolerance)
    return certified_order(seq, h_max=len(seq) - 1, min_windows=0)


def monomial_form(report: OrderReport) -> PolynomialForm:
    """Coefficients gamma_0..gamma_h with gamma_h = D^h a_0 / h! and gamma_0 = a_0."""
    if report.certified_order is None:
        raise InputError("report carries no certified order")
    if report.kind not in DIVISIBLE_KINDS:
        raise UnsupportedForm(f"monomial form needs a divisible group, not {report.kind}")
    if report.monomial is not None:
        return report.monomial
    return PolynomialForm(newton_to_monomial(report.newton_coeffs))


def _normalize(value, kind):
    if kind == "integer" and isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def term_value(report: OrderReport, n: int, form: str = "newton"):
    """a_n from the report, by the Newton, Lagrange or barycentric form."""
    h = report.certified_order
    if h is None:
        raise InputError("report carries no certified order")
    if n < 0:
        raise InputError("n must be nonnegative")
    if form == "newton":
        return kernels.newton_eval(report.newton_coeffs, n)
    nodes = report.nodes
    if form == "lagrange":
        acc = nodes[0] * lagrange_weight(n, 0, h)
        for k in range(1, h + 1):
            acc = acc + nodes[k] * lagrange_weight(n, k, h)
        return _normalize(acc, report.kind)
    if form == "barycentric":
        if report.kind not in SCALAR_KINDS:
            raise UnsupportedForm("barycentric form needs scalar elements")
        if n <= h:
            return nodes[n]
        weights = [Fraction((-1) ** (h - k) * binomial(h, k), n - k) for k in range(h + 1)]
        num = sum((w * a for w, a in zip(weights, nodes)), nodes[0] * 0)
        den = sum(weights)
        return _normalize(num / den, report.kind)
    raise InputError(f"unknown form {form!r}")

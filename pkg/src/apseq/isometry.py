"""(m,q)-isometries of finite metric spaces and of linear maps on normed spaces.

A map is checked on a finite sample of pairs: every pair trace
``d(T^n x, T^n y)^q`` must certify order <= m - 1 on the horizon.  Finite
spaces use all P^2 pairs; linear maps use the standard-basis pairs plus
seeded random rational pairs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .diffcalc import (
    APPROXIMATE,
    DEFAULT_TOLERANCE,
    EXACT,
    Sequence,
    certified_order,
)
from .errors import (
    HypothesisViolation,
    Inconclusive,
    InputError,
    MetricViolation,
    NotAnAP,
)
from .exactnum import GaussianRational, binomial, format_rational
from .linalg import ExactMatrix, Vector, p_norm
from .powerclass import as_exponent, power_values
from .seqalg import DoubleSequence, decimate, diagonal, gcd_refine


# --- spaces and maps --------------------------------------------------------


@dataclass(frozen=True)
class FiniteMetricSpace:
    dist: tuple

    def __post_init__(self):
        rows = tuple(tuple(_real(x) for x in r) for r in self.dist)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise InputError("distance matrix must be square and nonempty")
        object.__setattr__(self, "dist", rows)

    @property
    def points(self) -> int:
        return len(self.dist)

    @property
    def exact(self) -> bool:
        return not any(isinstance(x, float) for r in self.dist for x in r)


def _real(x):
    if isinstance(x, bool):
        raise InputError("booleans are not distances")
    if isinstance(x, float):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"bad distance {x!r}")


def validate_metric(space: FiniteMetricSpace, tol: float = 1e-12) -> bool:
    """Check the metric axioms exhaustively; raise MetricViolation on the first failure."""
    d = space.dist
    P = space.points
    for i in range(P):
        if d[i][i] != 0:
            raise MetricViolation("identity", (i, i))
    for i in range(P):
        for j in range(P):
            if i != j and d[i][j] <= 0:
                raise MetricViolation("positivity", (i, j))
    for i in range(P):
        for j in range(i + 1, P):
            if d[i][j] != d[j][i]:
                raise MetricViolation("symmetry", (i, j))
    slack = 0 if space.exact else tol
    for i in range(P):
        for j in range(P):
            for k in range(P):
                if d[i][k] > d[i][j] + d[j][k] + slack:
                    raise MetricViolation("triangle", (i, j, k))
    return True


@dataclass(frozen=True)
class NormSpec:
    """p-norm with p in {1, 2, inf} or any real p >= 1."""

    p: Any = 2

    def __post_init__(self):
        p = self.p
        if p in ("inf", "Infinity", math.inf):
            p = math.inf
        elif isinstance(p, str):
            p = Fraction(p)
        if p != math.inf and p < 1:
            raise InputError("norm exponent p must be >= 1")
        if p != math.inf and Fraction(p).denominator == 1:
            p = int(p)
        object.__setattr__(self, "p", p)

    def exact_for(self, q: Fraction, real: bool) -> bool:
        if q.denominator != 1:
            return False
        if self.p == 2:
            return q.numerator % 2 == 0
        return self.p in (1, math.inf) and real

    def power(self, v: Vector, q: Fraction, exact: bool):
        if exact:
            if self.p == 2:
                return v.norm_sq() ** (q.numerator // 2)
            mags = [abs(a) for a in v]
            base = sum(mags, Fraction(0)) if self.p == 1 else max(mags, default=Fraction(0))
            return Fraction(base) ** q.numerator
        return p_norm(v, self.p) ** float(q)

    def label(self):
        return "inf" if self.p == math.inf else self.p


@dataclass(frozen=True)
class FiniteMap:
    """Self-map of a finite metric space given by its table."""

    space: FiniteMetricSpace
    table: tuple

    def __post_init__(self):
        table = tuple(int(t) for t in self.table)
        if len(table) != self.space.points or any(not 0 <= t < len(table) for t in table):
            raise InputError("map table must send 0..P-1 into 0..P-1")
        object.__setattr__(self, "table", table)

    def apply(self, x: int) -> int:
        return self.table[x]

    def compose(self, other: "FiniteMap") -> "FiniteMap":
        """self o other."""
        return FiniteMap(self.space, tuple(self.table[other.table[i]] for i in range(len(self.table))))

    def power(self, k: int) -> "FiniteMap":
        result = FiniteMap(self.space, tuple(range(len(self.table))))
        for _ in range(k):
            result = self.compose(result)
        return result

    def commutes_with(self, other: "FiniteMap") -> bool:
        return self.compose(other).table == other.compose(self).table

    def trace_is_exact(self, q: Fraction) -> bool:
        return self.space.exact and q.denominator == 1

    def distance_q(self, x, y, q: Fraction, exact: bool):
        d = self.space.dist[x][y]
        return Fraction(d) ** q.numerator if exact else float(d) ** float(q)

    def default_pairs(self, seed: int = 0, random_pairs: int = 0) -> list:
        P = self.space.points
        return [(i, j) for i in range(P) for j in range(P)]


@dataclass(frozen=True)
class LinearMap:
    """Linear self-map of Q(i)^d with a p-norm."""

    matrix: ExactMatrix
    norm: NormSpec = field(default_factory=NormSpec)

    def apply(self, v: Vector) -> Vector:
        return self.matrix @ v

    def compose(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix * other.matrix, self.norm)

    def power(self, k: int) -> "LinearMap":
        return LinearMap(self.matrix ** k, self.norm)

    def commutes_with(self, other: "LinearMap") -> bool:
        return self.matrix.commutes_with(other.matrix)

    def trace_is_exact(self, q: Fraction) -> bool:
        return self.norm.exact_for(q, self.matrix.is_real())

    def distance_q(self, x: Vector, y: Vector, q: Fraction, exact: bool):
        v = x - y
        return self.norm.power(v, q, exact and (self.norm.p == 2 or v.is_real()))

    def default_pairs(self, seed: int = 0, random_pairs: int = 32) -> list:
        n = self.matrix.dim
        zero = Vector.zeros(n)
        basis = [Vector.basis(n, i) for i in range(n)]
        pairs = [(zero, e) for e in basis]
        pairs += [(basis[i], basis[j]) for i in range(n) for j in range(i + 1, n)]
        rng = random.Random(seed)
        complex_ok = not self.matrix.is_real()

        def vec():
            out = []
            for _ in range(n):
                re = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                im = Fraction(rng.randint(-6, 6), rng.randint(1, 4)) if complex_ok else 0
                out.append(GaussianRational(re, im) if im else re)
            return Vector(out)

        pairs += [(vec(), vec()) for _ in range(random_pairs)]
        return pairs


SelfMap = Any  # FiniteMap | LinearMap


def _as_map(T, norm=None):
    if isinstance(T, (FiniteMap, LinearMap)):
        return T
    if isinstance(T, ExactMatrix):
        return LinearMap(T, norm or NormSpec())
    raise InputError(f"not a self-map: {T!r}")


def _point(T, x):
    if isinstance(T, LinearMap) and not isinstance(x, Vector):
        return Vector(x)
    return x


def pair_trace(T, x, y, q, horizon: int, norm: NormSpec | None = None,
               tolerance: float = DEFAULT_TOLERANCE) -> Sequence:
    """(d(T^n x, T^n y)^q) for n < horizon.

    Exact when the distances are rational and q allows it (see NormSpec);
    floating point in approximate mode otherwise.
    """
    T = _as_map(T, norm)
    if horizon < 2:
        raise InputError("pair_trace needs horizon >= 2")
    q = as_exponent(q)
    x, y = _point(T, x), _point(T, y)
    exact = T.trace_is_exact(q)
    values = []
    for _ in range(horizon):
        values.append(T.distance_q(x, y, q, exact))
        x, y = T.apply(x), T.apply(y)
    if exact:
        return Sequence(tuple(values))
    return Sequence(tuple(float(v) for v in values), APPROXIMATE, tolerance)


# --- (m,q)-isometry checks ---------------------------------------------------


@dataclass
class IsometryReport:
    m: int
    q: Fraction
    horizon: int
    pairs_checked: int = 0
    orders: list = field(default_factory=list)  # per pair: certified order, or None
    holds: bool = False
    aggregate_m: int | None = None
    strict: bool = False
    strict_witness: Any = None
    violation_witness: Any = None
    classification: str = "none"  # "isometry" | "proper" | "none"
    proper: tuple | None = None  # (m, q) minimal
    finite_inconsistency: bool = False


def _divisors_desc(n: int) -> list[int]:
    return [k for k in range(n, 0, -1) if n % k == 0]


def check_mq_isometry(T, m: int, q, horizon: int, pairs=None, norm: NormSpec | None = None,
                      min_windows: int = 1, seed: int = 0, random_pairs: int = 32,
                      tolerance: float = DEFAULT_TOLERANCE) -> IsometryReport:
    """Certify every sampled pair trace has order <= m - 1.

    Returns a report; ``holds`` is False with ``violation_witness`` set when a
    pair exceeds the order.  Raises Inconclusive when the horizon is too short.
    """
    if m < 1:
        raise InputError("m must be >= 1")
    T = _as_map(T, norm)
    q = as_exponent(q)
    if horizon < m + min_windows:
        raise Inconclusive(f"horizon {horizon} < m + min_windows = {m + min_windows}")
    if pairs is None:
        pairs = T.default_pairs(seed, random_pairs)
    report = IsometryReport(m, q, horizon, len(pairs))
    traces = []
    for pair in pairs:
        trace = pair_trace(T, pair[0], pair[1], q, horizon, tolerance=tolerance)
        try:
            rep = certified_order(trace, m - 1, min_windows)
        except NotAnAP:
            report.orders.append(None)
            report.violation_witness = pair
            return report
        report.orders.append(rep.certified_order)
        traces.append((pair, trace, rep.certified_order))
    report.holds = True
    top = max(report.orders, default=0)
    report.aggregate_m = top + 1
    report.strict = top == m - 1
    for pair, _, order in traces:
        if order == top:
            report.strict_witness = pair
            break
    if top == 0:
        report.classification = "isometry"
        report.proper = (1, None)
        return report
    if isinstance(T, FiniteMap):
        # orbits in a finite space are eventually periodic, so a nonconstant
        # polynomial trace cannot persist
        report.finite_inconsistency = True
    report.classification = "proper"
    report.proper = (top + 1, q)
    for k in _divisors_desc(top):
        if k == 1:
            break
        if all(_root_certifies(trace, k, top // k, min_windows, tolerance)
               for _, trace, _ in traces):
            report.proper = (top // k + 1, q / k)
            break
    return report


def _root_certifies(trace: Sequence, k: int, order: int, min_windows: int, tol: float) -> bool:
    if all(v == 0 for v in trace.elements):
        return True
    try:
        certified_order(power_values(trace, Fraction(1, k), tol), order, min_windows)
    except (NotAnAP, Inconclusive):
        return False
    return True


def rho_q(T, m: int, q, x, y, norm: NormSpec | None = None,
          tolerance: float = DEFAULT_TOLERANCE):
    """rho_T(x, y)^q = sum_{k<m} (-1)^(m-1-k) C(m-1,k) d(T^k x, T^k y)^q.

    Exact whenever the trace is.  A negative value beyond tolerance means T
    is not an (m,q)-isometry on this pair.
    """
    if m < 1:
        raise InputError("m must be >= 1")
    trace = pair_trace(T, x, y, q, max(m, 2), norm, tolerance)
    vals = trace.elements
    total = sum(
        (-1 if (m - 1 - k) % 2 else 1) * binomial(m - 1, k) * vals[k] for k in range(m)
    )
    if trace.mode == EXACT:
        if total < 0:
            raise HypothesisViolation("rho inner sum is negative", ["(m,q)-isometry on pair"])
        return total
    scale = sum(binomial(m - 1, k) * abs(vals[k]) for k in range(m))
    if total < -tolerance * scale:
        raise HypothesisViolation("rho inner sum is negative", ["(m,q)-isometry on pair"])
    return max(total, 0.0)


def rho(T, m: int, q, x, y, norm: NormSpec | None = None):
    """rho_T(x, y); exact when q = 1, float otherwise."""
    q = as_exponent(q)
    value = rho_q(T, m, q, x, y, norm)
    if q == 1:
        return value
    return float(value) ** (1.0 / float(q))


def rho_triangle(T, m: int, q, x, y, z, norm: NormSpec | None = None,
                 tol: float = 1e-12) -> bool:
    """rho(x, y) <= rho(x, z) + rho(z, y); decided exactly for q in {1, 2}."""
    q = as_exponent(q)
    a, b, c = (rho_q(T, m, q, *p, norm=norm) for p in ((x, y), (x, z), (z, y)))
    if isinstance(a, Fraction) and isinstance(b, Fraction) and isinstance(c, Fraction):
        if q == 1:
            return a <= b + c
        if q == 2:
            # sqrt(a) <= sqrt(b) + sqrt(c)  <=>  a - b - c <= 2 sqrt(bc)
            lhs = a - b - c
            return lhs <= 0 or lhs * lhs <= 4 * b * c
    e = 1.0 / float(q)
    ra, rb, rc = (float(v) ** e for v in (a, b, c))
    return ra <= rb + rc + tol * max(1.0, ra)


# --- power, gcd and product theorems ----------------------------------------


@dataclass
class TheoremReport:
    theorem: str
    holds: bool
    details: dict = field(default_factory=dict)
    witness: Any = None


def verify_power_theorem(T, k: int, m: int, q, horizon: int, pairs=None,
                         norm: NormSpec | None = None, min_windows: int = 1,
                         seed: int = 0) -> TheoremReport:
    """A strict (m,q)-isometry has every power T^k strict (m,q) as well.

    Checked twice: by decimating T's traces by k, and directly on T^k.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    T = _as_map(T, norm)
    q = as_exponent(q)
    if pairs is None:
        pairs = T.default_pairs(seed)
    base = check_mq_isometry(T, m, q, horizon, pairs, min_windows=min_windows)
    if not (base.holds and base.strict):
        raise HypothesisViolation("T is not a strict (m,q)-isometry on the sample",
                                  ["T strict (m,q)-isometry"])
    long_horizon = k * (horizon - 1) + 1
    decimated_orders = []
    witness = None
    for pair in pairs:
        trace = decimate(pair_trace(T, pair[0], pair[1], q, long_horizon), k)
        try:
            decimated_orders.append(certified_order(trace, m - 1, min_windows).certified_order)
        except NotAnAP:
            decimated_orders.append(None)
            witness = pair
            break
    decimated_ok = witness is None and max(decimated_orders, default=0) == m - 1
    direct = check_mq_isometry(T.power(k), m, q, horizon, pairs, min_windows=min_windows)
    holds = decimated_ok and direct.holds and direct.strict
    return TheoremReport(
        "power", holds,
        {"k": k, "m": m, "q": format_rational(q),
         "decimated_max_order": max((o for o in decimated_orders if o is not None), default=None),
         "direct_aggregate_m": direct.aggregate_m, "direct_strict": direct.strict},
        witness or direct.violation_witness,
    )


def verify_power_gcd(T, c: int, m: int, d: int, ell: int, q, horizon: int, pairs=None,
                     norm: NormSpec | None = None, min_windows: int = 1,
                     seed: int = 0) -> TheoremReport:
    """T^c (m,q) and T^d (l,q) imply T^e (h,q), e = gcd(c,d), h = min(m,l)."""
    T = _as_map(T, norm)
    q = as_exponent(q)
    if pairs is None:
        pairs = T.default_pairs(seed)
    rep_c = check_mq_isometry(T.power(c), m, q, horizon, pairs, min_windows=min_windows)
    rep_d = check_mq_isometry(T.power(d), ell, q, horizon, pairs, min_windows=min_windows)
    failures = [name for name, rep in (("T^c (m,q)-isometry", rep_c), ("T^d (l,q)-isometry", rep_d))
                if not rep.holds]
    if failures:
        raise HypothesisViolation("power-gcd hypotheses fail: " + ", ".join(failures), failures)
    e, h_minus = gcd_refine(c, m - 1, d, ell - 1)
    h = h_minus + 1
    rep_e = check_mq_isometry(T.power(e), h, q, horizon, pairs, min_windows=min_windows)
    return TheoremReport(
        "power-gcd", rep_e.holds,
        {"e": e, "h": h, "q": format_rational(q), "observed_m": rep_e.aggregate_m},
        rep_e.violation_witness,
    )


def verify_product_theorem(S, T, n: int, m: int, q, horizon: int, pairs=None,
                           norm: NormSpec | None = None, min_windows: int = 1,
                           seed: int = 0) -> TheoremReport:
    """Commuting T (n,q) and S (m,q) give ST an (m+n-1, q)-isometry.

    For each pair the grid a[i][j] = d(S^i T^j x, S^i T^j y)^q is built and
    its diagonal certified; ST is also checked directly.
    """
    S, T = _as_map(S, norm), _as_map(T, norm)
    q = as_exponent(q)
    if not S.commutes_with(T):
        raise HypothesisViolation("S and T do not commute", ["ST=TS"])
    if pairs is None:
        pairs = T.default_pairs(seed)
    rep_t = check_mq_isometry(T, n, q, horizon, pairs, min_windows=min_windows)
    rep_s = check_mq_isometry(S, m, q, horizon, pairs, min_windows=min_windows)
    failures = [name for name, rep in (("T (n,q)-isometry", rep_t), ("S (m,q)-isometry", rep_s))
                if not rep.holds]
    if failures:
        raise HypothesisViolation("product hypotheses fail: " + ", ".join(failures), failures)
    bound = m + n - 2
    exact = S.trace_is_exact(q) and T.trace_is_exact(q)
    max_diag = 0
    witness = None
    for x, y in pairs:
        x, y = _point(T, x), _point(T, y)
        grid = []
        tx, ty = x, y
        cols = []
        for _ in range(horizon):
            cols.append((tx, ty))
            tx, ty = T.apply(tx), T.apply(ty)
        rows = [[None] * horizon for _ in range(horizon)]
        for j, (sx, sy) in enumerate(cols):
            for i in range(horizon):
                rows[i][j] = S.distance_q(sx, sy, q, exact)
                sx, sy = S.apply(sx), S.apply(sy)
        if exact:
            grid = DoubleSequence(tuple(tuple(r) for r in rows))
        else:
            grid = DoubleSequence(tuple(tuple(float(v) for v in r) for r in rows),
                                  APPROXIMATE, DEFAULT_TOLERANCE)
        try:
            diag = diagonal(grid, bound, min_windows)
        except (HypothesisViolation, Inconclusive):
            witness = (x, y)
            break
        if not diag.holds or diag.diagonal_order > bound:
            witness = (x, y)
            break
        max_diag = max(max_diag, diag.diagonal_order)
    direct = check_mq_isometry(S.compose(T), m + n - 1, q, horizon, pairs, min_windows=min_windows)
    holds = witness is None and direct.holds
    return TheoremReport(
        "product", holds,
        {"bound_m": m + n - 1, "q": format_rational(q), "max_diagonal_order": max_diag,
         "direct_aggregate_m": direct.aggregate_m},
        witness or direct.violation_witness,
    )

"""Exact scalars and the combinatorial coefficients used by the difference calculus.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`
(always in lowest terms with a positive denominator).  Complex scalars are
:class:`GaussianRational`.  Both text formats, ``"p/q"`` and ``"p/q+r/si"``,
are the ones used in every JSON file the CLI reads or writes.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import InputError

__all__ = [
    "Fraction",
    "GaussianRational",
    "Scalar",
    "binomial",
    "falling_skip",
    "format_rational",
    "format_scalar",
    "lagrange_weight",
    "lagrange_weight_binomial",
    "parse_rational",
    "parse_scalar",
    "verify_identity",
]


class GaussianRational:
    """Element of Q(i), stored as two Fractions.

    >>> z = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    >>> z * z.conjugate()
    GaussianRational('1')
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + im
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        if isinstance(other, complex):
            return GaussianRational(Fraction(other.real), Fraction(other.imag))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return self * o.conjugate() / n

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, GaussianRational]


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    """Canonical text for an exact scalar: ``"p/q"``, ``"r/si"`` or ``"p/q+r/si"``."""
    if isinstance(x, GaussianRational):
        re, im = x.re, x.im
        if im == 0:
            return format_rational(re)
        imag = format_rational(abs(im)) + "i"
        if re == 0:
            return ("-" if im < 0 else "") + imag
        return format_rational(re) + ("-" if im < 0 else "+") + imag
    if isinstance(x, float):
        return repr(x)
    return format_rational(x)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Floats and decimal strings are rejected so that exact files stay exact.
    """
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"not a rational: {text!r}")
    s = text.strip()
    if not s or any(c in s for c in ".eE"):
        raise InputError(f"not an exact rational: {text!r}")
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {text!r}") from exc
    return value


def parse_scalar(text):
    """Parse a rational or Gaussian-rational string.

    Returns a Fraction when the imaginary part is absent or zero.
    """
    if not isinstance(text, str):
        return parse_rational(text)
    s = text.replace(" ", "")
    if not s.endswith("i"):
        return parse_rational(s)
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split <= 0:
        real_txt, imag_txt = "", body
    else:
        real_txt, imag_txt = body[:split], body[split:]
    if imag_txt in ("", "+"):
        imag = Fraction(1)
    elif imag_txt == "-":
        imag = Fraction(-1)
    else:
        imag = parse_rational(imag_txt)
    real = parse_rational(real_txt) if real_txt else Fraction(0)
    if imag == 0:
        return real
    return GaussianRational(real, imag)


class _BinomialTable:
    """Triangular memo of binomial coefficients up to ``bound`` rows.

    Rows are appended under a lock; reads of completed rows need no lock
    because rows are never mutated once published.
    """

    def __init__(self, bound: int = 256):
        self.bound = bound
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                prev = rows[-1]
                rows.append((1,) + tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1)) + (1,))

    def __call__(self, n: int, k: int) -> int:
        if n >= self.bound:
            return math.comb(n, k)
        if n >= len(self._rows):
            self._extend(n)
        return self._rows[n][k]


_binomial_table = _BinomialTable()


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 when k > n."""
    if n < 0 or k < 0:
        raise InputError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return _binomial_table(n, k)


def _signed_binomial(n: int, k: int) -> int:
    # binomial extended to negative upper index; used only by cross-checks
    if k < 0:
        return 0
    if n >= 0:
        return binomial(n, k)
    return (-1) ** k * binomial(k - n - 1, k)


def falling_skip(n: int, k: int, h: int) -> int:
    """n(n-1)...(n-h) with the single factor (n-k) left out."""
    prod = 1
    for j in range(h + 1):
        if j != k:
            prod *= n - j
    return prod


def lagrange_weight(n: int, k: int, h: int) -> Fraction:
    """Weight of the node value a_k when interpolating a_n from a_0..a_h.

    (-1)^(h-k) n(n-1)..(n-k)^..(n-h) / (k! (h-k)!), the factor (n-k) omitted.
    """
    if not 0 <= k <= h:
        raise InputError(f"lagrange_weight needs 0 <= k <= h, got k={k}, h={h}")
    sign = -1 if (h - k) % 2 else 1
    return Fraction(sign * falling_skip(n, k, h), math.factorial(k) * math.factorial(h - k))


def lagrange_weight_binomial(n: int, k: int, h: int) -> Fraction:
    """Binomial-product form (-1)^(h-k) C(n,k) C(n-k-1, h-k); valid for n > h."""
    if not 0 <= k <= h:
        raise InputError(f"lagrange_weight needs 0 <= k <= h, got k={k}, h={h}")
    if n <= h:
        raise InputError("binomial-product form needs n > h")
    sign = -1 if (h - k) % 2 else 1
    return Fraction(sign * binomial(n, k) * binomial(n - k - 1, h - k))


def _alternating_partial_sum(i: int, j: int) -> bool:
    if not 0 <= j < i:
        raise InputError(f"alternating_partial_sum needs 0 <= j < i, got i={i}, j={j}")
    lhs = sum((-1) ** t * binomial(i, t) for t in range(j + 1))
    return lhs == (-1) ** j * binomial(i - 1, j)


def _skipped_sum(n: int, h: int, k: int) -> bool:
    if not 0 <= k <= h < n:
        raise InputError(f"skipped_sum needs 0 <= k <= h < n, got n={n}, h={h}, k={k}")
    lhs = sum((-1) ** (j - k) * binomial(n, j) * binomial(j, k) for j in range(k, h + 1))
    return lhs == lagrange_weight(n, k, h)


def _unity_sum(n: int, h: int) -> bool:
    if n < 0 or h < 0:
        raise InputError(f"unity_sum needs n, h >= 0, got n={n}, h={h}")
    return sum(lagrange_weight(n, k, h) for k in range(h + 1)) == 1


_IDENTITIES = {
    "alternating_partial_sum": _alternating_partial_sum,
    "skipped_sum": _skipped_sum,
    "unity_sum": _unity_sum,
}


def verify_identity(name: str, **params: int) -> bool:
    """Evaluate both sides of a combinatorial identity exactly.

    ``alternating_partial_sum(i, j)``
        sum_{t<=j} (-1)^t C(i,t) == (-1)^j C(i-1, j), for 0 <= j < i.
    ``skipped_sum(n, h, k)``
        sum_{j=k..h} (-1)^(j-k) C(n,j) C(j,k) == lagrange_weight(n, k, h),
        for 0 <= k <= h < n.
    ``unity_sum(n, h)``
        sum_k lagrange_weight(n, k, h) == 1, for n, h >= 0.
    """
    try:
        fn = _IDENTITIES[name]
    except KeyError:
        raise InputError(f"unknown identity {name!r}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {name}: {exc}") from None


def is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Rational, GaussianRational)) and not isinstance(x, bool)

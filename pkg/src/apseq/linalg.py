"""Exact vectors and square matrices over the Gaussian rationals.

Matrices double as ring elements: ``*`` between two matrices is the ring
product, ``**`` takes nonnegative integer powers, and ``x ** 0`` is the
identity of the right size.  That is the whole ring interface the
perturbation checks rely on, so plain Fractions work there too.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence as Seq

from .errors import InputError
from .exactnum import GaussianRational, format_scalar, parse_scalar


def _scalar(x):
    if isinstance(x, GaussianRational):
        return x if x.im != 0 else x.re
    if isinstance(x, bool):
        raise InputError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise InputError(f"not an exact scalar: {x!r}")


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational)) and not isinstance(x, bool)


def _abs2(x) -> Fraction:
    if isinstance(x, GaussianRational):
        return x.abs2()
    return x * x


class Vector:
    """Immutable exact vector."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(_scalar(e) for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def _raw(cls, entries: tuple) -> "Vector":
        v = object.__new__(cls)
        object.__setattr__(v, "entries", entries)
        return v

    @classmethod
    def zeros(cls, n: int) -> "Vector":
        return cls._raw((Fraction(0),) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "Vector":
        return cls._raw(tuple(Fraction(int(j == i)) for j in range(n)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _check(self, other: "Vector") -> None:
        if len(other.entries) != len(self.entries):
            raise InputError("vector dimension mismatch")

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        return Vector._raw(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        return Vector._raw(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Vector._raw(tuple(-a for a in self.entries))

    def __mul__(self, c):
        if not _is_scalar(c):
            return NotImplemented
        return Vector._raw(tuple(a * c for a in self.entries))

    __rmul__ = __mul__

    def __truediv__(self, c):
        if not _is_scalar(c):
            return NotImplemented
        return Vector._raw(tuple(a / c for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def dot(self, other: "Vector"):
        """Inner product, linear in the first argument."""
        self._check(other)
        return sum((a * b.conjugate() for a, b in zip(self.entries, other.entries)), Fraction(0))

    def norm_sq(self) -> Fraction:
        return sum((_abs2(a) for a in self.entries), Fraction(0))

    def is_real(self) -> bool:
        return not any(isinstance(a, GaussianRational) for a in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(("Vector", self.entries))

    def __repr__(self):
        return f"Vector({[format_scalar(e) for e in self.entries]})"

    def to_strings(self) -> list[str]:
        return [format_scalar(e) for e in self.entries]


class ExactMatrix:
    """Square matrix with Fraction / GaussianRational entries."""

    __slots__ = ("rows", "dim")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_scalar(e) for e in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("ExactMatrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "dim", n)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _raw(cls, rows: tuple) -> "ExactMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "dim", len(rows))
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls._raw(((Fraction(0),) * n,) * n)

    @classmethod
    def diag(cls, values: Seq) -> "ExactMatrix":
        n = len(values)
        vals = [_scalar(v) for v in values]
        return cls._raw(
            tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))
        )

    @classmethod
    def shift(cls, n: int) -> "ExactMatrix":
        """Nilpotent Jordan block with ones on the superdiagonal."""
        return cls._raw(
            tuple(tuple(Fraction(int(j == i + 1)) for j in range(n)) for i in range(n))
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "ExactMatrix") -> None:
        if other.dim != self.dim:
            raise InputError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        return ExactMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        return ExactMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return ExactMatrix._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        cols = tuple(zip(*other.rows))
        zero = Fraction(0)
        return ExactMatrix._raw(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols)
                for r in self.rows
            )
        )

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.dim:
            raise InputError("vector dimension mismatch")
        zero = Fraction(0)
        return Vector._raw(
            tuple(sum((a * b for a, b in zip(r, v.entries) if a and b), zero) for r in self.rows)
        )

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.matmul(other)
        if isinstance(other, Vector):
            return self.apply(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.matmul(other)
        if _is_scalar(other):
            return ExactMatrix._raw(tuple(tuple(a * other for a in r) for r in self.rows))
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return ExactMatrix._raw(tuple(tuple(other * a for a in r) for r in self.rows))
        return NotImplemented

    def __truediv__(self, c):
        if not _is_scalar(c):
            return NotImplemented
        return ExactMatrix._raw(tuple(tuple(a / c for a in r) for r in self.rows))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("matrix powers need a nonnegative integer exponent")
        result = ExactMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result.matmul(base)
            k >>= 1
            if k:
                base = base.matmul(base)
        return result

    def adjoint(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return ExactMatrix._raw(tuple(tuple(a.conjugate() for a in col) for col in zip(*self.rows)))

    @property
    def H(self) -> "ExactMatrix":
        return self.adjoint()

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_identity(self) -> bool:
        return all(
            a == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, a in enumerate(r)
        )

    def is_real(self) -> bool:
        return not any(isinstance(a, GaussianRational) for r in self.rows for a in r)

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return self.matmul(other) == other.matmul(self)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        n, m = self.dim, other.dim
        return ExactMatrix._raw(
            tuple(
                tuple(self.rows[i // m][j // m] * other.rows[i % m][j % m] for j in range(n * m))
                for i in range(n * m)
            )
        )

    def max_abs(self) -> float:
        return max(abs(a) for r in self.rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(("ExactMatrix", self.rows))

    def __repr__(self):
        return f"ExactMatrix({self.to_strings()})"

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(a) for a in r] for r in self.rows]

    @classmethod
    def from_strings(cls, rows) -> "ExactMatrix":
        return cls(rows)


def inverse(a: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    n = a.dim
    work = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise InputError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return ExactMatrix([row[n:] for row in work])


def p_norm(v: Vector, p) -> float:
    """Floating p-norm; p may be ``math.inf``."""
    mags = [abs(a) for a in v.entries]
    if p == math.inf:
        return max(mags, default=0.0)
    p = float(p)
    return sum(m ** p for m in mags) ** (1.0 / p)

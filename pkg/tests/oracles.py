"""Independent reference computations (sympy) used by several test modules."""

from fractions import Fraction

import sympy

from apseq.exactnum import GaussianRational
from apseq.linalg import ExactMatrix


def to_sympy(m: ExactMatrix) -> sympy.Matrix:
    def conv(x):
        if isinstance(x, GaussianRational):
            return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(
                x.im.numerator, x.im.denominator)
        x = Fraction(x)
        return sympy.Rational(x.numerator, x.denominator)

    return sympy.Matrix(m.dim, m.dim, lambda i, j: conv(m[i, j]))


def sympy_defect(T: ExactMatrix, m: int, S: ExactMatrix | None = None) -> sympy.Matrix:
    t = to_sympy(T)
    s = t.H if S is None else to_sympy(S)
    acc = sympy.zeros(T.dim)
    for k in range(m + 1):
        acc += (-1) ** (m - k) * sympy.binomial(m, k) * (s ** k) * (t ** k)
    return acc.applyfunc(sympy.expand)


def is_zero_matrix(M: sympy.Matrix) -> bool:
    return all(sympy.simplify(x) == 0 for x in M)

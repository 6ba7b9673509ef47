"""Seeded instance generators for property suites and benchmarks.

Commuting pairs are built constructively: T = A (x) U with A = lam (I + p(J))
on a Jordan block and U a unitary with Gaussian-rational entries, and
perturbations Q = r(J) (x) V with r(0) = 0 and V a power of U.  Random
independent matrices almost never commute, so nothing here is rejection
sampled.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import GaussianRational
from .linalg import ExactMatrix, inverse

G = GaussianRational

UNITARIES = {
    1: [
        ExactMatrix([[1]]),
        ExactMatrix([[-1]]),
        ExactMatrix([[G(0, 1)]]),
        ExactMatrix([[G(Fraction(3, 5), Fraction(4, 5))]]),
        ExactMatrix([[G(Fraction(5, 13), Fraction(-12, 13))]]),
    ],
    2: [
        ExactMatrix([[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]]),
        ExactMatrix([[G(Fraction(3, 5), Fraction(4, 5)), 0], [0, 1]]),
        ExactMatrix([[0, 1], [1, 0]]),
        ExactMatrix([[0, G(0, 1)], [1, 0]]),
        ExactMatrix.identity(2),
    ],
}


def rotation() -> ExactMatrix:
    """The 3/5, 4/5 rotation."""
    return UNITARIES[2][0]


def random_rational(rng: random.Random, size: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, den))


def random_polynomial(rng: random.Random, degree: int, size: int = 6, den: int = 4) -> list[Fraction]:
    """Coefficients c_0..c_degree with a nonzero leading coefficient."""
    coeffs = [random_rational(rng, size, den) for _ in range(degree)]
    lead = Fraction(0)
    while lead == 0:
        lead = random_rational(rng, size, den)
    return coeffs + [lead]


def eval_poly(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def polynomial_values(coeffs, length: int, start: int = 0) -> list[Fraction]:
    return [eval_poly(coeffs, n) for n in range(start, start + length)]


def random_bivariate_grid(rng: random.Random, deg_i: int, deg_j: int, size: int):
    """Grid of a bivariate polynomial with exact bidegree (deg_i, deg_j)."""
    coeffs = [[random_rational(rng) for _ in range(deg_j + 1)] for _ in range(deg_i + 1)]
    while coeffs[deg_i][deg_j] == 0:
        coeffs[deg_i][deg_j] = random_rational(rng)
    grid = []
    for i in range(size):
        row = []
        for j in range(size):
            row.append(sum(coeffs[a][b] * i ** a * j ** b
                           for a in range(deg_i + 1) for b in range(deg_j + 1)))
        grid.append(row)
    return grid


def poly_in(N: ExactMatrix, coeffs) -> ExactMatrix:
    """sum c_k N^k."""
    out = ExactMatrix.zeros(N.dim)
    power = N ** 0
    for c in coeffs:
        if c:
            out = out + power * c
        power = power * N
    return out


def _nilpotent_poly(rng: random.Random, J: ExactMatrix, min_power: int = 1) -> ExactMatrix:
    r = J.dim
    coeffs = [Fraction(0)] * min_power + [random_rational(rng, 3, 2) for _ in range(min_power, r)]
    return poly_in(J, coeffs)


def _unitary(rng: random.Random, s: int) -> ExactMatrix:
    return rng.choice(UNITARIES[s])


def isometry_family(rng: random.Random, max_block: int = 3):
    """(T, commuting): T = A (x) W with A = lam (I + p(J)) and W a unitary or an
    identity block.  ``commuting`` draws random nilpotents commuting with T.

    A is a strict (2n-1)-isometry when p(J) has index n, and so is T.
    """
    r = rng.randint(1, max_block)
    J = ExactMatrix.shift(r)
    lam = rng.choice([Fraction(1), Fraction(-1), G(0, 1), G(Fraction(3, 5), Fraction(4, 5))])
    A = (ExactMatrix.identity(r) + _nilpotent_poly(rng, J)) * lam
    if r < 3 and rng.random() < 0.5:
        # identity second factor: nilpotents may act there too
        t = rng.randint(2, 3)
        Jt = ExactMatrix.shift(t)

        def commuting(rng):
            if rng.random() < 0.3:
                return _nilpotent_poly(rng, J).kron(_any_matrix(rng, t))
            B = poly_in(J, [random_rational(rng, 3, 2) or 1] + [random_rational(rng, 3, 2) for _ in range(r - 1)])
            return B.kron(_nilpotent_poly(rng, Jt))

        return A.kron(ExactMatrix.identity(t)), commuting
    U = _unitary(rng, rng.choice([1, 2]))

    def commuting(rng):
        return _nilpotent_poly(rng, J).kron(U ** rng.randint(0, 2))

    return A.kron(U), commuting


def _any_matrix(rng: random.Random, n: int) -> ExactMatrix:
    return ExactMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])


def hs_instance(rng: random.Random, max_block: int = 3):
    """(T, Q) with T an m-isometry and Q a commuting nilpotent."""
    T, commuting = isometry_family(rng, max_block)
    return T, commuting(rng)


def inverse_instance(rng: random.Random, max_block: int = 3):
    """(S, T, P, Q) with S a left n-inverse of T, SP = PS, TQ = QT.

    Either S = T* for an isometry-family T (so n = m), or S = T^-1 (n = 1).
    """
    T, commuting = isometry_family(rng, max_block)
    Q = commuting(rng)
    if rng.random() < 0.5:
        S = T.adjoint()
        P = commuting(rng).adjoint()
    else:
        S = inverse(T)
        P = commuting(rng)
    return S, T, P, Q


def ring_instance(rng: random.Random, max_block: int = 3):
    """(y, x, a, b) with ax = xa, by = yb, a and b nilpotent, (y^k x^k) polynomial."""
    if rng.random() < 0.5:
        x, commuting = isometry_family(rng, max_block)
        y = x.adjoint()
        a = commuting(rng)
        b = commuting(rng).adjoint()
        return y, x, a, b
    r = rng.randint(1, max_block + 1)
    J = ExactMatrix.shift(r)
    c = Fraction(rng.choice([1, 2, 3, -2]), rng.choice([1, 3]))
    I = ExactMatrix.identity(r)
    x = (I + _nilpotent_poly(rng, J)) * c
    y = (I + _nilpotent_poly(rng, J)) * (1 / c)
    a = _nilpotent_poly(rng, J)
    b = _nilpotent_poly(rng, J)
    return y, x, a, b


def non_isometry(rng: random.Random, dim: int = 2) -> ExactMatrix:
    """A generic small integer matrix; almost never an m-isometry."""
    return ExactMatrix([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)])

"""Pure-Python difference kernels.  Same API as the compiled ``_kernels``."""

from __future__ import annotations

from math import comb


def difference_rows(values, depth):
    """Rows 0..depth of the difference triangle; row r has len(values) - r entries."""
    row = list(values)
    rows = [row]
    for _ in range(depth):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        rows.append(row)
    return rows


def leading_column(values):
    """D^0 a_0, D^1 a_0, ..., D^(N-1) a_0."""
    row = list(values)
    out = [row[0]]
    while len(row) > 1:
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        out.append(row[0])
    return out


def direct_difference(values, h):
    """D^h a_n = sum_k (-1)^(h-k) C(h,k) a_{n+k} for every available n."""
    coeffs = [(-1) ** (h - k) * comb(h, k) for k in range(h + 1)]
    out = []
    for n in range(len(values) - h):
        acc = coeffs[0] * values[n]
        for k in range(1, h + 1):
            acc = acc + coeffs[k] * values[n + k]
        out.append(acc)
    return out


def difference_rows_float(values, depth):
    row = [float(v) for v in values]
    rows = [row]
    for _ in range(depth):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        rows.append(row)
    return rows


def float_row_vanishes(values, row, order, tol):
    """True when |row[n]| <= tol * sum_k C(order,k) |values[n+k]| for every n.

    ``row`` is D^order of ``values``.
    """
    weights = [comb(order, k) for k in range(order + 1)]
    for n, d in enumerate(row):
        scale = 0.0
        for k in range(order + 1):
            scale += weights[k] * abs(values[n + k])
        if abs(d) > tol * scale:
            return False
    return True


def newton_eval(coeffs, n):
    """sum_k C(n,k) coeffs[k] for an integer n >= 0."""
    acc = coeffs[0] * 1
    for k in range(1, len(coeffs)):
        c = comb(n, k)
        if c:
            acc = acc + c * coeffs[k]
    return acc

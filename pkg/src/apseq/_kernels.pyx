# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled difference kernels.  Same API as ``_kernels_py``."""

from libc.math cimport fabs
from libc.stdlib cimport malloc, free
from math import comb


def difference_rows(values, Py_ssize_t depth):
    cdef list row = list(values)
    cdef list rows = [row]
    cdef list nxt
    cdef Py_ssize_t r, i, m
    for r in range(depth):
        m = len(row) - 1
        nxt = [None] * m
        for i in range(m):
            nxt[i] = row[i + 1] - row[i]
        rows.append(nxt)
        row = nxt
    return rows


def leading_column(values):
    cdef list row = list(values)
    cdef list out = [row[0]]
    cdef Py_ssize_t i, m
    m = len(row)
    while m > 1:
        for i in range(m - 1):
            row[i] = row[i + 1] - row[i]
        m -= 1
        out.append(row[0])
    return out


def direct_difference(values, Py_ssize_t h):
    cdef list vals = list(values)
    cdef list coeffs = [comb(h, k) if (h - k) % 2 == 0 else -comb(h, k) for k in range(h + 1)]
    cdef Py_ssize_t n, k, count = len(vals) - h
    cdef list out = [None] * max(count, 0)
    for n in range(count):
        acc = coeffs[0] * vals[n]
        for k in range(1, h + 1):
            acc = acc + coeffs[k] * vals[n + k]
        out[n] = acc
    return out


def difference_rows_float(values, Py_ssize_t depth):
    cdef Py_ssize_t n = len(values), r, i, m
    cdef double *buf = <double *> malloc(max(n, 1) * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef list rows = []
    try:
        for i in range(n):
            buf[i] = float(values[i])
        rows.append([buf[i] for i in range(n)])
        m = n
        for r in range(depth):
            for i in range(m - 1):
                buf[i] = buf[i + 1] - buf[i]
            m -= 1
            rows.append([buf[i] for i in range(m)])
    finally:
        free(buf)
    return rows


def float_row_vanishes(values, row, Py_ssize_t order, double tol):
    cdef Py_ssize_t n, k, count = len(row)
    cdef double scale, d
    cdef list weights = [float(comb(order, k)) for k in range(order + 1)]
    for n in range(count):
        scale = 0.0
        for k in range(order + 1):
            scale += <double> weights[k] * fabs(<double> values[n + k])
        d = row[n]
        if fabs(d) > tol * scale:
            return False
    return True


def newton_eval(coeffs, Py_ssize_t n):
    acc = coeffs[0] * 1
    cdef Py_ssize_t k
    for k in range(1, len(coeffs)):
        c = comb(n, k)
        if c:
            acc = acc + c * coeffs[k]
    return acc

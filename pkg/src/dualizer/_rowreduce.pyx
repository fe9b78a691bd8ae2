# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan kernel for dense matrices over a prime field.

Same contract as dualizer._rowreduce_py: reduce in place to reduced row
echelon form with deterministic first-nonzero pivoting, return the pivot
columns.  Entries must already be reduced into [0, p).
"""


cdef long long _modinv(long long a, long long p):
    # Fermat: a^(p-2) mod p.  p is prime and a != 0 mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_inplace(long long[:, ::1] a, long long p):
    """Row-reduce ``a`` in place mod ``p``; return the list of pivot columns."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t col, i, j, piv
    cdef long long inv, factor, tmp
    pivots = []

    for col in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _modinv(a[r, col], p)
        if inv != 1:
            for j in range(col, cols):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            factor = a[i, col]
            if factor == 0:
                continue
            for j in range(col, cols):
                a[i, j] = (a[i, j] - factor * a[r, j]) % p
                if a[i, j] < 0:
                    a[i, j] += p
        pivots.append(col)
        r += 1

    return pivots

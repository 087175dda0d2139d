# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: triad residual scans and sign-pattern enumeration.

Mirrors pcrank._kernels_py; the dispatcher in pcrank._kernels picks this
module when the extension built.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def triad_stats(const double[:, :] logs):
    """Scan all triads i<j<k of a skew-symmetric log matrix.

    Returns (max |r|, sum r^2) over residuals r = L[i,j] + L[j,k] - L[i,k].
    """
    cdef Py_ssize_t n = logs.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double r, max_abs = 0.0, sum_sq = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = logs[i, j] + logs[j, k] - logs[i, k]
                if r < 0:
                    r = -r
                if r > max_abs:
                    max_abs = r
                sum_sq += r * r
    return max_abs, sum_sq


def count_admissible(int n):
    """Count upper-triangle sign patterns whose tournament is transitive.

    Bit q of a pattern encodes the sign of entry (i,j), i<j, in lexicographic
    pair order: bit 1 means +1 (j beats i), bit 0 means -1 (i beats j).
    A tournament is transitive iff its out-degree sequence is a permutation
    of {0,...,n-1}.
    """
    cdef int m = n * (n - 1) // 2
    cdef unsigned long long total = 1ULL << m
    cdef unsigned long long pattern, count = 0
    cdef int q, i, j, ok, full
    cdef int[64] row
    cdef int[64] col
    cdef int[32] score
    q = 0
    for i in range(n):
        for j in range(i + 1, n):
            row[q] = i
            col[q] = j
            q += 1
    full = (1 << n) - 1
    for pattern in range(total):
        for i in range(n):
            score[i] = 0
        for q in range(m):
            if (pattern >> q) & 1:
                # sign(i,j) = +1: j points at i in the "beats" orientation
                score[col[q]] += 1
            else:
                score[row[q]] += 1
        ok = 0
        for i in range(n):
            ok |= 1 << score[i]
        if ok == full:
            count += 1
    return int(count)

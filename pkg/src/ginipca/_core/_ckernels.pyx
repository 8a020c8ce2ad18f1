# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernels, drop-in replacements for kernels_numpy.

The leave-one-out kernel avoids re-sorting: both inputs are sorted once and
each deletion walks the sorted order skipping one position, so the whole
series costs O(n^2) instead of O(n^2 log n).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport pow

cnp.import_array()


def decumulative_ranks(x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.intp_t[::1] order = np.argsort(xv, kind="stable")
    cdef Py_ssize_t n = xv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t lo = 0, hi, j
    cdef double r
    while lo < n:
        hi = lo
        while hi + 1 < n and xv[order[hi + 1]] == xv[order[lo]]:
            hi += 1
        r = n - 0.5 * (lo + hi)
        for j in range(lo, hi + 1):
            out[order[j]] = r
        lo = hi + 1
    return out_arr


cdef void _loo_rank_pow(const double[::1] x, const cnp.intp_t[::1] order,
                        Py_ssize_t skip, double expo, double[::1] out) noexcept:
    """Rank powers of x with one index removed, written at original positions.

    order is the stable ascending argsort of the full x; out[skip] is left
    untouched and must be ignored by the caller.
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t m = n - 1
    cdef Py_ssize_t i = 0, j, pos = 0, cnt
    cdef double v, r
    while i < n:
        if order[i] == skip:
            i += 1
            continue
        v = x[order[i]]
        cnt = 0
        j = i
        while j < n and x[order[j]] == v:
            if order[j] != skip:
                cnt += 1
            j += 1
        # remaining run occupies 0-based ascending positions [pos, pos+cnt-1]
        r = pow(m - 0.5 * (pos + pos + cnt - 1), expo)
        while i < j:
            if order[i] != skip:
                out[order[i]] = r
            i += 1
        pos += cnt
    return


def loo_gini_corr_series(a, b, double nu):
    cdef double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t n = av.shape[0]
    cdef cnp.intp_t[::1] oa = np.argsort(av, kind="stable")
    cdef cnp.intp_t[::1] ob = np.argsort(bv, kind="stable")
    cdef double[::1] ra = np.empty(n, dtype=np.float64)
    cdef double[::1] rb = np.empty(n, dtype=np.float64)
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double expo = nu - 1.0
    cdef double total = 0.0
    cdef double mean, ac, num, den
    cdef Py_ssize_t d, j
    for j in range(n):
        total += av[j]
    for d in range(n):
        _loo_rank_pow(av, oa, d, expo, ra)
        _loo_rank_pow(bv, ob, d, expo, rb)
        mean = (total - av[d]) / (n - 1)
        num = 0.0
        den = 0.0
        for j in range(n):
            if j == d:
                continue
            ac = av[j] - mean
            num += ac * rb[j]
            den += ac * ra[j]
        out[d] = num / den
    return out_arr

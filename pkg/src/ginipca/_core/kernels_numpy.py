"""Numpy implementations of the rank kernels.

These are the reference kernels. ginipca._core swaps in the compiled
versions when the extension module is importable; both must agree bitwise
on ranks and to float precision on the leave-one-out series.
"""

import numpy as np


def decumulative_ranks(x):
    """Rank a float64 vector so the largest value gets rank 1.

    Ties receive the average of the ranks they span, which keeps the rank
    sum at n(n+1)/2. Input validation lives in ginipca.ranks.
    """
    n = x.shape[0]
    order = np.argsort(x, kind="stable")
    xs = x[order]
    new_run = np.r_[True, xs[1:] != xs[:-1]]
    run_id = np.cumsum(new_run) - 1
    starts = np.r_[np.nonzero(new_run)[0], n]
    lo = starts[run_id]
    hi = starts[run_id + 1] - 1
    out = np.empty(n, dtype=np.float64)
    # ascending mean rank of a tie run on 0-based [lo, hi] is (lo+hi)/2 + 1,
    # so the decumulative rank is n - (lo+hi)/2
    out[order] = n - 0.5 * (lo + hi)
    return out


def loo_gini_corr_series(a, b, nu):
    """Delete-one series of the rank correlation of a (values) with b (ranks).

    Each entry is dot(a - mean, rank(b)^(nu-1)) / dot(a - mean, rank(a)^(nu-1))
    recomputed on the sample with one observation removed, ranks included.
    """
    n = a.shape[0]
    expo = nu - 1.0
    out = np.empty(n, dtype=np.float64)
    mask = np.ones(n, dtype=bool)
    for i in range(n):
        mask[i] = False
        aa = a[mask]
        bb = b[mask]
        ra = decumulative_ranks(aa) ** expo
        rb = decumulative_ranks(bb) ** expo
        ac = aa - aa.mean()
        out[i] = (ac @ rb) / (ac @ ra)
        mask[i] = True
    return out


def loo_pearson_corr_series(a, b):
    """Delete-one series of the Pearson correlation of a with b."""
    n = a.shape[0]
    m = n - 1.0
    sa = a.sum() - a
    sb = b.sum() - b
    saa = a @ a - a * a
    sbb = b @ b - b * b
    sab = a @ b - a * b
    cov = sab - sa * sb / m
    va = saa - sa * sa / m
    vb = sbb - sb * sb / m
    return cov / np.sqrt(va * vb)

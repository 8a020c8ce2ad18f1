"""Eigendecomposition of symmetrized correlation matrices.

A cyclic Jacobi sweep is used instead of a LAPACK call so eigenvector signs
and the ordering of tied eigenvalues are reproducible across platforms and
BLAS builds. The matrices here are small (K x K), where Jacobi is both
accurate and fast enough.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DimensionError, NumericError

_OFFDIAG_TOL = 1e-14
_MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenDecomposition:
    """Sorted eigensystem of a symmetrized correlation matrix.

    lambdas: eigenvalues of S = GC + GC^T in descending order.
    mus: lambdas / 2, the generalized variability carried by each axis.
    vectors: orthonormal eigenvectors in columns, largest-magnitude entry
        oriented positive.
    shares: 100 * lambda / sum(|lambda|). When every eigenvalue is
        nonnegative this is the usual percentage of the eigenvalue sum;
        with a negative eigenvalue the column sums to less than 100.
    """

    lambdas: np.ndarray
    mus: np.ndarray
    vectors: np.ndarray
    shares: np.ndarray


def symmetrize(gc):
    """Return gc + gc.T, whose eigensystem defines the principal axes."""
    m = np.asarray(getattr(gc, "gc", gc), dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m + m.T


def symmetric_eigen(s):
    """Full eigendecomposition of a symmetric matrix, deterministically ordered.

    Eigenvalues come out in descending order, stable under exact ties, and
    each eigenvector is flipped so its largest-magnitude entry is positive
    (lowest index winning magnitude ties). Raises ContractError when the
    input is not symmetric within 1e-12 and NumericError when the Jacobi
    iteration fails to converge.
    """
    s = np.asarray(s, dtype=np.float64)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {s.shape}")
    scale = max(1.0, float(np.abs(s).max()))
    if float(np.abs(s - s.T).max()) > 1e-12 * scale:
        raise ContractError("matrix is not symmetric within 1e-12")
    lam, vec = _jacobi(0.5 * (s + s.T))

    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    vec = vec[:, order]
    for k in range(vec.shape[1]):
        pivot = int(np.argmax(np.abs(vec[:, k])))
        if vec[pivot, k] < 0.0:
            vec[:, k] = -vec[:, k]

    total = float(np.abs(lam).sum())
    shares = 100.0 * lam / total if total > 0.0 else np.zeros_like(lam)
    return EigenDecomposition(lambdas=lam, mus=0.5 * lam, vectors=vec, shares=shares)


def _jacobi(a):
    """Cyclic Jacobi iteration on a symmetric matrix (works on a copy)."""
    a = a.copy()
    n = a.shape[0]
    v = np.eye(n)
    norm = float(np.linalg.norm(a))
    if norm == 0.0 or n == 1:
        return np.diag(a).copy(), v
    for _ in range(_MAX_SWEEPS):
        off = float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))
        if off < _OFFDIAG_TOL * norm:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                sn = t * c
                rp, rq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * rp - sn * rq
                a[:, q] = sn * rp + c * rq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - sn * rq
                a[q, :] = sn * rp + c * rq
                # the rotation annihilates the pivot pair analytically
                a[p, q] = 0.0
                a[q, p] = 0.0
                rp, rq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * rp - sn * rq
                v[:, q] = sn * rp + c * rq
    raise NumericError(
        f"Jacobi iteration did not reach the off-diagonal tolerance "
        f"within {_MAX_SWEEPS} sweeps"
    )

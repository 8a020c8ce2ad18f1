"""Generalized Gini mean difference covariation and standardization.

The co-variability of two samples pairs the values of the first with the
rank powers of the second, so the resulting correlation matrix is not
symmetric in general: entry (l, k) takes column l on the value side and
column k on the rank side.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateColumnError, DimensionError
from .ranks import centered_rank_power, check_nu


@dataclass(frozen=True)
class GiniParams:
    """Order parameter of the generalized Gini mean difference.

    nu = 2 gives the classical Gini mean difference; larger values put more
    weight on the lower tail of the distribution.
    """

    nu: float = 2.0

    def __post_init__(self):
        object.__setattr__(self, "nu", check_nu(self.nu))

    @classmethod
    def of(cls, value):
        """Coerce a GiniParams or a bare number to GiniParams."""
        return value if isinstance(value, cls) else cls(value)


@dataclass(frozen=True)
class StandardizedMatrix:
    """Column-wise standardization of a data matrix.

    z holds (values - column_means) / column_gmds; column_gmds is each
    column's own variability on the scale used for the fit.
    """

    z: np.ndarray
    column_means: np.ndarray
    column_gmds: np.ndarray


@dataclass(frozen=True)
class GiniCorrelationMatrix:
    """Gini correlations of standardized columns, value side on rows."""

    gc: np.ndarray
    nu: float


def gmd(x_l, x_k, params=2.0):
    """Generalized Gini mean difference of x_l (values) with x_k (ranks).

        gmd = -(2 nu / (N (N - 1))) * sum over i of
              (x_l[i] - mean(x_l)) * centered rank power of x_k at i

    With x_l = x_k and nu = 2 this equals the average absolute difference
    between two distinct observations. The value is invariant to strictly
    increasing transforms of x_k because only its ranks enter.
    """
    p = GiniParams.of(params)
    a = np.asarray(x_l, dtype=np.float64)
    b = np.asarray(x_k, dtype=np.float64)
    if a.ndim != 1 or a.shape != b.shape:
        raise DimensionError(
            f"need two equal-length 1-D samples, got shapes {a.shape} and {b.shape}"
        )
    n = a.shape[0]
    rc = centered_rank_power(b, p.nu)
    return float(-(2.0 * p.nu / (n * (n - 1.0))) * ((a - a.mean()) @ rc))


def gini_standardize(X, params=2.0):
    """Center each column and divide it by its own Gini mean difference.

    Raises DegenerateColumnError naming the first constant column, since a
    column with zero variability cannot be put on the common scale.
    """
    p = GiniParams.of(params)
    values, names = matrix_and_names(X)
    means = values.mean(axis=0)
    gmds = np.array([gmd(values[:, j], values[:, j], p) for j in range(values.shape[1])])
    for j, g in enumerate(gmds):
        if g <= 0.0:
            raise DegenerateColumnError(
                f"column {names[j]!r} has no variability (GMD = {abs(g) if g == 0.0 else g:g})"
            )
    return StandardizedMatrix(
        z=(values - means) / gmds, column_means=means, column_gmds=gmds
    )


def rank_dual_matrix(z, nu):
    """Scaled centered rank powers of each column of z.

    The scaling is chosen so that z.T @ rank_dual_matrix(z, nu) is the Gini
    correlation matrix of the standardized columns.
    """
    n, k = z.shape
    rc = np.column_stack([centered_rank_power(z[:, j], nu) for j in range(k)])
    return (-(2.0 * nu) / (n * (n - 1.0))) * rc


def gini_correlation_matrix(X, params=2.0):
    """Gini correlation matrix of a data matrix.

    Entry (l, k) is gmd(z_l, z_k) for the standardized columns, so rows
    carry the value side and columns the rank side. The diagonal is set to
    exactly 1, its analytic value.
    """
    p = GiniParams.of(params)
    std = X if isinstance(X, StandardizedMatrix) else gini_standardize(X, p)
    gc = std.z.T @ rank_dual_matrix(std.z, p.nu)
    np.fill_diagonal(gc, 1.0)
    return GiniCorrelationMatrix(gc=gc, nu=p.nu)


def matrix_and_names(X):
    """Extract (values, column names) from a DataMatrix or a 2-D array."""
    values = np.asarray(getattr(X, "values", X), dtype=np.float64)
    if values.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {values.shape}")
    n, k = values.shape
    if n < 2 or k < 1:
        raise DimensionError(f"need at least 2 rows and 1 column, got {n}x{k}")
    names = getattr(X, "column_names", None)
    if not names:
        names = tuple(f"c{j + 1}" for j in range(k))
    return values, tuple(names)

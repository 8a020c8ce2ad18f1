"""Fitting entry points for the Gini and variance principal axes."""

import logging
from dataclasses import dataclass

import numpy as np

from .data import DataMatrix, as_data_matrix
from .eigen import EigenDecomposition, symmetric_eigen, symmetrize
from .errors import DegenerateColumnError
from .ginicov import (
    GiniParams,
    StandardizedMatrix,
    gini_standardize,
    rank_dual_matrix,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GiniModel:
    """Fitted principal axes of one method on one data matrix.

    gc is the (generally asymmetric) correlation matrix whose symmetrized
    form was diagonalized; scores holds the observation coordinates N x K.
    dual is the N x K matrix satisfying gc = z.T @ dual, so inner products
    of scores with dual columns reproduce every variability quantity for
    both methods through one code path: scaled centered rank powers for the
    Gini method, standardized values over N for the variance method.
    """

    method_tag: str
    params: GiniParams | None
    data: DataMatrix
    standardized: StandardizedMatrix
    gc: np.ndarray
    eigen: EigenDecomposition
    scores: np.ndarray
    dual: np.ndarray

    @property
    def n_obs(self):
        return self.scores.shape[0]

    @property
    def n_axes(self):
        return self.scores.shape[1]


def fit_gini_pca(X, params=2.0):
    """Fit rank-based principal axes of order nu.

    Each column is centered and divided by its own generalized Gini mean
    difference, the Gini correlation matrix of the standardized columns is
    symmetrized and diagonalized, and the scores are the standardized
    observations projected on the eigenvectors.
    """
    p = GiniParams.of(params)
    dm = as_data_matrix(X)
    _warn_if_short(dm)
    std = gini_standardize(dm, p)
    dual = rank_dual_matrix(std.z, p.nu)
    gc = std.z.T @ dual
    np.fill_diagonal(gc, 1.0)
    eig = symmetric_eigen(symmetrize(gc))
    return GiniModel(
        method_tag="gini",
        params=p,
        data=dm,
        standardized=std,
        gc=gc,
        eigen=eig,
        scores=std.z @ eig.vectors,
        dual=dual,
    )


def fit_classic_pca(X):
    """Fit classical variance principal axes on the correlation matrix.

    Columns are standardized by their population standard deviation, which
    takes the place of the Gini mean difference in StandardizedMatrix. The
    eigen step runs on twice the correlation matrix so that mus, shares and
    axis ordering are directly comparable with the Gini fits.
    """
    dm = as_data_matrix(X)
    _warn_if_short(dm)
    means = dm.values.mean(axis=0)
    stds = dm.values.std(axis=0)
    for j, s in enumerate(stds):
        if s == 0.0:
            raise DegenerateColumnError(
                f"column {dm.column_names[j]!r} has no variability (std = 0)"
            )
    z = (dm.values - means) / stds
    dual = z / z.shape[0]
    corr = z.T @ dual
    np.fill_diagonal(corr, 1.0)
    eig = symmetric_eigen(symmetrize(corr))
    return GiniModel(
        method_tag="variance",
        params=None,
        data=dm,
        standardized=StandardizedMatrix(z=z, column_means=means, column_gmds=stds),
        gc=corr,
        eigen=eig,
        scores=z @ eig.vectors,
        dual=dual,
    )


def eigen_shares(model):
    """Percent of total absolute variability carried by each axis."""
    return model.eigen.shares.copy()


def method_label(model):
    """Short tag used in file names and reports, e.g. gini_2 or variance."""
    if model.method_tag == "gini":
        return f"gini_{model.params.nu:g}"
    return model.method_tag


def _warn_if_short(dm):
    n, k = dm.values.shape
    if n <= k:
        log.warning(
            "only %d observations for %d columns; axes will be unstable", n, k
        )

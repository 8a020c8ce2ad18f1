"""Axis diagnostics: contributions, axis-variable correlations and
jackknife significance tests.

Everything here works off a fitted GiniModel and treats the two methods
uniformly through the model's dual matrix; only the own-variability of an
axis needs a per-method branch.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _core
from .errors import ParameterError
from .ginicov import GiniParams, gmd
from .ranks import rank_power

# an axis whose variability is this small relative to the largest one is
# treated as carrying no information
_DEGENERATE_REL = 1e-12


@dataclass(frozen=True)
class UStatResult:
    """Outcome of one jackknife significance test."""

    u: float
    se: float
    z: float
    p_value: float


@dataclass(frozen=True)
class SignificanceTable:
    """u_stat_test results over a grid of axes (rows) and variables (columns)."""

    axes: tuple
    u: np.ndarray
    se: np.ndarray
    z: np.ndarray
    p_value: np.ndarray


def ggmd(model, axis):
    """Generalized variability carried by one axis (0-based).

    This is the quadratic form of the axis eigenvector in the correlation
    matrix and equals the axis mu up to roundoff.
    """
    k = _check_axis(model, axis)
    b = model.eigen.vectors[:, k]
    return float(model.scores[:, k] @ (model.dual @ b))


def act(model):
    """Absolute contribution of each observation to each axis (N x K).

    Every column sums to 1. An axis with vanishing variability has no
    contributions to distribute and comes back as a NaN column.
    """
    parts = model.scores * (model.dual @ model.eigen.vectors)
    totals = parts.sum(axis=0)
    out = np.full_like(parts, np.nan)
    ok = _live_axes(totals)
    out[:, ok] = parts[:, ok] / totals[ok]
    return out


def rct(model):
    """Relative contribution of each axis to each observation (N x K).

    Rows sum to 1; an observation sitting exactly at the origin has no
    direction to attribute and comes back as a NaN row.
    """
    magnitudes = np.abs(model.scores)
    totals = magnitudes.sum(axis=1, keepdims=True)
    out = np.full_like(magnitudes, np.nan)
    ok = totals[:, 0] > 0.0
    out[ok] = magnitudes[ok] / totals[ok]
    return out


def axis_variable_correlations(model):
    """Correlation of each axis (rows) with each standardized variable.

    The axis scores take the value side and the variable the rank side, so
    for the Gini method entry (a, j) is gmd(f_a, z_j) / gmd(f_a, f_a); the
    variance method uses the Pearson analog. Degenerate axes give NaN rows.
    """
    f = model.scores
    centered = f - f.mean(axis=0)
    nums = centered.T @ model.dual
    ok = _live_axes(model.eigen.mus)
    own = np.ones(f.shape[1])
    for a in np.nonzero(ok)[0]:
        if model.method_tag == "gini":
            own[a] = gmd(f[:, a], f[:, a], model.params)
        else:
            own[a] = f[:, a].std()
    ok &= own > 0.0
    out = np.full_like(nums, np.nan)
    out[ok] = nums[ok] / own[ok, None]
    return out


def u_stat_test(model, axis, variable):
    """Jackknife significance test of one axis-variable correlation.

    The statistic u is the correlation itself; its standard error comes
    from the delete-one jackknife with ranks recomputed on every subsample.
    The reference distribution is standard normal, so p is the two-sided
    normal tail. Requires at least 10 observations.
    """
    if model.n_obs < 10:
        raise ParameterError(
            f"need at least 10 observations to jackknife, got {model.n_obs}"
        )
    a = _check_axis(model, axis)
    j = _check_variable(model, variable)
    f = np.ascontiguousarray(model.scores[:, a])
    zj = np.ascontiguousarray(model.standardized.z[:, j])
    if model.method_tag == "gini":
        return u_stat_pair_test(f, zj, model.params)
    return _jackknife_result(
        _pearson(f, zj), np.asarray(_core.loo_pearson_corr_series(f, zj))
    )


def u_stat_pair_test(x, y, params=2.0):
    """Jackknife significance test of the Gini correlation of two samples.

    The statistic is u = gmd(x, y) / gmd(x, x), with x on the value side
    and y on the rank side. Under independence u is asymptotically normal
    around zero, so the reported p is the two-sided normal tail of
    z = u / se. Requires at least 10 observations.
    """
    nu = GiniParams.of(params).nu
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    if x.ndim != 1 or x.shape != y.shape:
        raise ParameterError(
            f"need two equal-length 1-D samples, got shapes {x.shape} and {y.shape}"
        )
    if x.shape[0] < 10:
        raise ParameterError(
            f"need at least 10 observations to jackknife, got {x.shape[0]}"
        )
    centered = x - x.mean()
    u = float((centered @ rank_power(y, nu)) / (centered @ rank_power(x, nu)))
    return _jackknife_result(u, np.asarray(_core.loo_gini_corr_series(x, y, nu)))


def _jackknife_result(u, series):
    n = series.shape[0]
    variance = (n - 1.0) / n * float(np.sum((series - series.mean()) ** 2))
    se = math.sqrt(variance)
    if se == 0.0:
        z = math.copysign(math.inf, u) if u != 0.0 else 0.0
    else:
        z = u / se
    return UStatResult(u=u, se=se, z=z, p_value=math.erfc(abs(z) / math.sqrt(2.0)))


def significance_table(model, axes=None):
    """Run u_stat_test for every requested axis against every variable.

    axes defaults to all of them; pass an iterable of 0-based indices to
    restrict the rows (the jackknife cost grows with N^2 per cell).
    """
    if axes is None:
        axes = range(model.n_axes)
    axes = tuple(_check_axis(model, a) for a in axes)
    k = model.scores.shape[1]
    u = np.empty((len(axes), k))
    se = np.empty_like(u)
    z = np.empty_like(u)
    p = np.empty_like(u)
    for row, a in enumerate(axes):
        for j in range(k):
            r = u_stat_test(model, a, j)
            u[row, j], se[row, j], z[row, j], p[row, j] = r.u, r.se, r.z, r.p_value
    return SignificanceTable(axes=axes, u=u, se=se, z=z, p_value=p)


def act_tilde(u):
    """Axis-variable correlations scaled to unit length per variable.

    Accepts the u matrix (axes x variables) or a SignificanceTable. Each
    variable's column is divided by its Euclidean norm, making entries
    comparable across variables; an all-zero column comes back as NaN.
    """
    m = np.asarray(getattr(u, "u", u), dtype=np.float64)
    norms = np.sqrt((m * m).sum(axis=0))
    out = np.full_like(m, np.nan)
    ok = norms > 0.0
    out[:, ok] = m[:, ok] / norms[ok]
    return out


def _pearson(a, b):
    ac = a - a.mean()
    bc = b - b.mean()
    return float((ac @ bc) / math.sqrt((ac @ ac) * (bc @ bc)))


def _live_axes(weights):
    """Boolean mask of axes whose variability is not negligibly small."""
    weights = np.asarray(weights, dtype=np.float64)
    scale = float(np.abs(weights).max()) if weights.size else 0.0
    return np.abs(weights) > _DEGENERATE_REL * max(1.0, scale)


def _check_axis(model, axis):
    axis = int(axis)
    if not 0 <= axis < model.n_axes:
        raise ParameterError(f"axis {axis} out of range for {model.n_axes} axes")
    return axis


def _check_variable(model, variable):
    names = model.data.column_names
    if isinstance(variable, str):
        try:
            return names.index(variable)
        except ValueError:
            raise ParameterError(f"unknown column {variable!r}") from None
    variable = int(variable)
    if not 0 <= variable < len(names):
        raise ParameterError(
            f"variable {variable} out of range for {len(names)} columns"
        )
    return variable

"""Decumulative rank transforms.

All variability measures in this package are built from decumulative ranks:
the largest observation gets rank 1, the smallest rank N, and tied values
share the average of the ranks they span. Rank powers are always computed
by averaging ties first and raising to nu - 1 afterwards.
"""

import numpy as np

from . import _core
from .errors import DimensionError, ParameterError


def decumulative_ranks(column):
    """Decumulative tie-averaged ranks of a 1-D sample.

    >>> decumulative_ranks([10.0, 30.0, 20.0])
    array([3., 1., 2.])
    >>> decumulative_ranks([5.0, 5.0, 1.0])
    array([1.5, 1.5, 3. ])
    """
    x = np.asarray(column, dtype=np.float64)
    if x.ndim != 1:
        raise DimensionError(f"expected a 1-D sample, got shape {x.shape}")
    if x.shape[0] < 2:
        raise DimensionError(
            f"need at least 2 observations to rank, got {x.shape[0]}"
        )
    return _core.decumulative_ranks(x)


def rank_power(column, nu):
    """Decumulative ranks raised to the power nu - 1."""
    return decumulative_ranks(column) ** (check_nu(nu) - 1.0)


def centered_rank_power(column, nu):
    """Rank powers centered by their mean.

    This is the rank-side factor of the generalized Gini mean difference;
    for nu = 2 it is simply the centered rank vector.
    """
    rp = rank_power(column, nu)
    return rp - rp.mean()


def check_nu(nu):
    """Validate the variability order parameter and return it as a float."""
    nu = float(nu)
    if not nu > 1.0:
        raise ParameterError(f"nu must exceed 1, got {nu:g}")
    return nu

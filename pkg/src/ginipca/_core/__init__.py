"""Kernel dispatch between the compiled extension and the numpy fallback.

GINI_PCA_BACKEND controls the choice: "python" forces the numpy kernels,
"c" requires the compiled ones (ImportError when missing), and the default
"auto" prefers the compiled kernels when the build produced them.
"""

import logging
import os

from . import kernels_numpy

log = logging.getLogger(__name__)

_requested = os.environ.get("GINI_PCA_BACKEND", "auto").strip().lower() or "auto"
if _requested not in ("auto", "c", "python"):
    raise ImportError(
        f"GINI_PCA_BACKEND must be one of auto, c, python; got {_requested!r}"
    )

_impl = kernels_numpy
_name = "python"
if _requested in ("auto", "c"):
    try:
        from . import _ckernels as _impl
        _name = "c"
    except ImportError:
        if _requested == "c":
            raise
        log.debug("compiled kernels unavailable, using the numpy fallback")

decumulative_ranks = _impl.decumulative_ranks
loo_gini_corr_series = _impl.loo_gini_corr_series
loo_pearson_corr_series = kernels_numpy.loo_pearson_corr_series


def backend_name():
    """Name of the kernel implementation in use: "c" or "python"."""
    return _name

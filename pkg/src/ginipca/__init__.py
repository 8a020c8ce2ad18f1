"""Rank-based principal component analysis.

Axes are extracted from the generalized Gini mean difference of ranked
data instead of the variance, which makes them far less sensitive to
outlying observations while agreeing with classical PCA on clean Gaussian
data. The package ships the classical variance baseline, jackknife
significance tests for axis-variable correlations, and a Monte Carlo
contamination benchmark comparing the two approaches.
"""

from ._core import backend_name
from .data import DataMatrix, as_data_matrix, cars_dataset, load_csv, write_csv
from .diagnostics import (
    SignificanceTable,
    UStatResult,
    act,
    act_tilde,
    axis_variable_correlations,
    ggmd,
    rct,
    significance_table,
    u_stat_pair_test,
    u_stat_test,
)
from .eigen import EigenDecomposition, symmetric_eigen, symmetrize
from .errors import (
    ContractError,
    CsvParseError,
    DegenerateColumnError,
    DimensionError,
    GiniPcaError,
    NumericError,
    ParameterError,
)
from .ginicov import (
    GiniCorrelationMatrix,
    GiniParams,
    StandardizedMatrix,
    gini_correlation_matrix,
    gini_standardize,
    gmd,
)
from .pipeline import (
    GiniModel,
    eigen_shares,
    fit_classic_pca,
    fit_gini_pca,
    method_label,
)
from .ranks import centered_rank_power, decumulative_ranks, rank_power
from .simharness import (
    SimConfig,
    SimReport,
    contaminate,
    mse,
    repair_correlation,
    run_algorithm1,
    sample_mvn,
)

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "CsvParseError",
    "DataMatrix",
    "DegenerateColumnError",
    "DimensionError",
    "EigenDecomposition",
    "GiniCorrelationMatrix",
    "GiniModel",
    "GiniParams",
    "GiniPcaError",
    "NumericError",
    "ParameterError",
    "SignificanceTable",
    "SimConfig",
    "SimReport",
    "StandardizedMatrix",
    "UStatResult",
    "act",
    "act_tilde",
    "as_data_matrix",
    "axis_variable_correlations",
    "backend_name",
    "cars_dataset",
    "centered_rank_power",
    "contaminate",
    "decumulative_ranks",
    "eigen_shares",
    "fit_classic_pca",
    "fit_gini_pca",
    "ggmd",
    "gini_correlation_matrix",
    "gini_standardize",
    "gmd",
    "load_csv",
    "method_label",
    "mse",
    "rank_power",
    "rct",
    "repair_correlation",
    "run_algorithm1",
    "sample_mvn",
    "significance_table",
    "symmetric_eigen",
    "symmetrize",
    "u_stat_pair_test",
    "u_stat_test",
    "write_csv",
    "__version__",
]

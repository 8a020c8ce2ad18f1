"""Exception hierarchy shared by every ginipca module."""


class GiniPcaError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(GiniPcaError):
    """An argument value is outside its documented domain."""


class DimensionError(GiniPcaError):
    """Array shapes or sizes are incompatible with the operation."""


class DegenerateColumnError(GiniPcaError):
    """A column carries no variability, so it cannot be standardized."""


class CsvParseError(GiniPcaError):
    """A CSV file could not be interpreted as a numeric data matrix."""


class ContractError(GiniPcaError):
    """An internal consistency check failed on otherwise valid input."""


class NumericError(GiniPcaError):
    """An iterative numeric procedure failed to converge."""

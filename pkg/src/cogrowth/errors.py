"""Shared exception types."""


class CogrowthError(Exception):
    """Base for all package errors."""


class ConfigError(CogrowthError):
    """Bad user-supplied configuration (unknown group, malformed flag, ...)."""


class BudgetExceededError(CogrowthError):
    """A memory/vertex budget was exhausted before the computation finished."""


class ConvergenceError(CogrowthError):
    """An iterative solver hit its iteration cap without meeting tolerance."""


class MetricUnavailableError(CogrowthError):
    """Geodesic length is not implemented (or not verified) for this input."""

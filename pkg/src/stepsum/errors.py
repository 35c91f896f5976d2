"""Exception types shared across the package.

The distinction that matters downstream: DomainError and RangeError are
argument problems (the CLI maps them to distinct exit codes), ResourceError
and PanelBudgetError are refusals to start or finish a computation that
would exceed a configured budget.
"""

__all__ = [
    "StepSumError",
    "DomainError",
    "RangeError",
    "ResourceError",
    "PanelBudgetError",
    "ConfigurationError",
]


class StepSumError(Exception):
    """Base class for errors raised by this package."""


class DomainError(StepSumError, ValueError):
    """An argument violates a mathematical precondition (bad location,
    kernel undefined on the requested interval, unsupported exponent)."""


class RangeError(StepSumError, ValueError):
    """A query point lies outside the range covered by a prepared table."""


class ResourceError(StepSumError, RuntimeError):
    """A request would exceed a configured memory budget."""


class PanelBudgetError(StepSumError, RuntimeError):
    """Adaptive quadrature exhausted its panel budget before converging."""


class ConfigurationError(StepSumError, ValueError):
    """A sweep or command was assembled with inconsistent options."""

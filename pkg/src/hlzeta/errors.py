"""Exception taxonomy shared by every evaluator.

The CLI maps these onto exit codes: domain-type failures (bad parameters,
series outside its convergence disc) exit 3, convergence failures exit 2.
"""


class DomainError(ValueError):
    """A parameter violates the documented domain of an operation."""


class UnsupportedParameterError(DomainError):
    """A parameter is outside the supported sub-domain (e.g. lambda >= 2)."""


class DivergenceError(DomainError):
    """A series was requested outside its convergence region."""


class ConvergenceError(RuntimeError):
    """An evaluation failed to reach the requested tolerance within budget."""

"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an argument lies outside the admissible parameter domain."""


class ConsistencyError(RuntimeError):
    """Raised when a solver detects a state that contradicts the model's
    structural guarantees (e.g. more than one root where uniqueness is
    expected)."""

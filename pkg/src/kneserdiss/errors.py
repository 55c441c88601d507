"""Error types shared across the package."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of an operation."""


class CapacityError(ValueError):
    """Instance exceeds a configured size cap (ground set, vertex count, ...)."""


class SearchFailure(RuntimeError):
    """A bounded scan or search ran past its cap without settling the answer."""

"""Exception types shared across the package."""


class BoundsError(ValueError):
    """A point lies outside the grid it is bound to."""


class DomainError(ValueError):
    """An argument violates an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """A configured resource cap (cell count, node budget) was exceeded."""


class EngineError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""

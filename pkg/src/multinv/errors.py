"""Exception types shared across the package."""


class NonUnimodularError(ValueError):
    """An integer matrix that must lie in GL_n(Z) has |det| != 1."""


class BoundExceededError(RuntimeError):
    """A configured resource bound was passed (group order, closure size,
    resolution depth, orbit norm guard, quotient enumeration size)."""

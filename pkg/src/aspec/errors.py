"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid input: malformed graph or spec data, or out-of-domain parameters."""


class NumericalError(RuntimeError):
    """A numerical routine failed to meet its convergence contract."""

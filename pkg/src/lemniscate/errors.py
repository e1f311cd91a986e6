"""Exception types raised across the package."""


class DomainError(ValueError):
    """Parameters fall outside the domain an operation is defined on."""


class NonConvergence(ArithmeticError):
    """Root refinement failed to reach the requested accuracy."""


class NotBounded(ValueError):
    """The family has no bounded component to trace or integrate over."""

"""Exception types shared by all modules."""


class DomainError(ValueError):
    """An input lies outside the domain where an operation is defined."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed.

    Raised for non-scalar root-of-unity sums, denominators that fail to
    clear, and unbounded degree polytopes. Any of these indicates a bug,
    never bad user input.
    """

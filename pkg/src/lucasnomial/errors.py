"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class IndivisibleError(ArithmeticError):
    """An exact polynomial division turned out not to be exact."""


class InternalParityError(ArithmeticError):
    """A coefficient that must be divisible by a power of two is not.

    Raised only on an internal defect: the doubled companion recursion
    always produces coefficients divisible by its scale factor.
    """


class ResourceError(RuntimeError):
    """A requested enumeration exceeds the configured size budget."""

"""Exception types shared across the package."""


class GFNormError(Exception):
    """Base class for all package-specific errors."""


class NotPrime(GFNormError, ValueError):
    """The characteristic given to a field constructor is not prime."""


class DegreeZero(GFNormError, ValueError):
    """An extension degree or power exponent was zero."""


class ContextMismatch(GFNormError, ValueError):
    """Arithmetic mixed elements from different field contexts."""


class DivisionByZero(GFNormError, ZeroDivisionError):
    """Division by the zero element of a field."""


class NotADivisor(GFNormError, ValueError):
    """An integer or polynomial divisibility precondition failed."""


class NotInSubfield(GFNormError, ValueError):
    """An element was required to lie in an intermediate field but does not."""


class BothZero(GFNormError, ValueError):
    """gcd(0, 0) requested."""


class InvalidTuple(GFNormError, ValueError):
    """A divisor tuple violates its validity constraints."""


class NotAdmissible(GFNormError, ValueError):
    """Prescribed norm values fail the pairwise compatibility condition."""


class FactorizationTimeout(GFNormError, RuntimeError):
    """Integer factorization exceeded its deterministic work budget."""


class DiscreteLogBudget(GFNormError, RuntimeError):
    """A discrete logarithm instance exceeded the configured budget."""


class BudgetExceeded(GFNormError, RuntimeError):
    """An exhaustive or scanning operation exceeded its configured budget.

    Distinct from a proven negative result: the operation is inconclusive.
    """


class RoundingUnstable(GFNormError, ArithmeticError):
    """A numeric value that must be a small integer was too far from one."""

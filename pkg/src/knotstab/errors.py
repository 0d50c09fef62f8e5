"""Exception types shared across the package."""


class KnotStabError(Exception):
    """Base class for all library errors."""


class ParseError(KnotStabError, ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomial(KnotStabError, ValueError):
    pass


class NotReciprocal(KnotStabError, ValueError):
    pass


class OddDegree(KnotStabError, ValueError):
    pass


class SignConflict(KnotStabError, ValueError):
    pass


class EmptyCF(KnotStabError, ValueError):
    pass


class ZeroEntry(KnotStabError, ValueError):
    pass


class NotExpandable(KnotStabError, ValueError):
    pass


class OddDenominator(KnotStabError, ValueError):
    pass


class DimensionMismatch(KnotStabError, ValueError):
    pass


class SpecViolation(KnotStabError, ValueError):
    pass


class NotSymmetric(KnotStabError, ValueError):
    pass


class NonPositiveLeading(KnotStabError, ValueError):
    pass


class SingularSystem(KnotStabError, ArithmeticError):
    pass


class ConvergenceFailure(KnotStabError, ArithmeticError):
    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class NotRealRooted(KnotStabError, ValueError):
    pass


class NotCStable(KnotStabError, ValueError):
    pass


class ParityViolation(KnotStabError, ValueError):
    pass


class EvenLength(KnotStabError, ValueError):
    pass


class NotMultiAffine(KnotStabError, ValueError):
    pass


class PoleAtI(KnotStabError, ZeroDivisionError):
    pass


class RootAtZeroOrI(KnotStabError, ValueError):
    pass


class EvenP(KnotStabError, ValueError):
    pass


class BadFraction(KnotStabError, ValueError):
    pass


class CapExceeded(KnotStabError, RuntimeError):
    pass


class InvariantViolation(KnotStabError, AssertionError):
    pass


class ZeroK(KnotStabError, ValueError):
    """A twist parameter that must be nonzero was zero."""


class BadDimensions(DimensionMismatch):
    """Parameter lists of inconsistent length."""


class ZeroInput(ZeroPolynomial):
    """A multivariate input was identically zero."""

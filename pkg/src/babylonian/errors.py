"""Exception hierarchy shared by every module of the package."""


class BabylonianError(Exception):
    """Base class for all domain errors raised by :mod:`babylonian`."""


class ParseError(BabylonianError, ValueError):
    pass


class DivisionByZero(BabylonianError, ZeroDivisionError):
    pass


class UndefinedPower(BabylonianError, ValueError):
    """Raised for ``0 ** 0``."""


class NonPositiveIterate(BabylonianError, ValueError):
    pass


class NonPositiveRadicand(BabylonianError, ValueError):
    pass


class InvalidDegree(BabylonianError, ValueError):
    pass


class ZeroDerivative(BabylonianError, ArithmeticError):
    """The derivative vanishes at the current iterate; Newton cannot proceed."""


class InvalidDigit(BabylonianError, ValueError):
    pass


class InsufficientIterates(BabylonianError):
    """Too few iterates inside the quadratic basin to estimate an order."""


class NonConvergence(BabylonianError):
    """The iteration budget ran out before the tolerance was met.

    The partial trace is kept on ``self.trace`` so callers can still report it.
    """

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace

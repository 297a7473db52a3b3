"""Exception hierarchy shared by the whole package."""


class PdTestError(Exception):
    """Base class for all errors raised by :mod:`pdtest`."""


class NotUnidiagonal(PdTestError, ValueError):
    pass


class NotTriangleIntegral(PdTestError, ValueError):
    pass


class DimensionMismatch(PdTestError, ValueError):
    pass


class VertexOutOfRange(PdTestError, IndexError):
    pass


class NotDefined(PdTestError, ValueError):
    """An inflation at a pair was requested where no dotted edge exists."""


class Disconnected(PdTestError, ValueError):
    pass


class BudgetExceeded(PdTestError, RuntimeError):
    pass


class CoefficientOverflow(PdTestError, OverflowError):
    """A Gram coefficient left the signed 64-bit range."""


class MatrixParseError(PdTestError, ValueError):
    pass

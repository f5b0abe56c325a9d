"""Exception hierarchy shared by every module.

Each class names the precondition it reports, so the CLI can print
``type(exc).__name__`` as the violated contract.
"""


class ExactLAError(Exception):
    """Base class for all library errors."""


class DivisionByZero(ExactLAError, ZeroDivisionError):
    pass


class FieldMismatch(ExactLAError, ValueError):
    pass


class ZeroDimension(ExactLAError, ValueError):
    pass


class DimensionMismatch(ExactLAError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class BadCut(ExactLAError, ValueError):
    pass


class BadIndex(ExactLAError, IndexError):
    pass


class DivisionByZeroPoly(DivisionByZero):
    pass


class CharacteristicTooSmall(ExactLAError, ValueError):
    """Division by an integer k <= n is impossible in the coefficient field."""


class NotTriangular(ExactLAError, ValueError):
    pass


class SingularDiagonal(ExactLAError, ValueError):
    pass


class Singular(ExactLAError, ValueError):
    pass


class TooLarge(ExactLAError, ValueError):
    pass


class NotIndependent(ExactLAError, ValueError):
    pass


class NotTotal(ExactLAError, ValueError):
    pass


class ParseError(ExactLAError, ValueError):
    pass

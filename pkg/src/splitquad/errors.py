class SplitQuadError(Exception):
    """Base class for errors raised by this package."""


class NotInvertible(SplitQuadError, ZeroDivisionError):
    pass


class IdenticallyZero(SplitQuadError, ValueError):
    pass


class NotZeroDivisor(SplitQuadError, ValueError):
    pass


class NotNormalized(SplitQuadError, ValueError):
    pass


class WrongBranch(SplitQuadError, ValueError):
    pass


class Unsupported(SplitQuadError, NotImplementedError):
    pass


class ParseError(SplitQuadError, ValueError):
    pass

"""Exception types shared across the package."""


class SymdetError(Exception):
    """Base class for errors raised by this package."""


class ContextMismatch(SymdetError, ValueError):
    """Operands live in different fields, variable sets or quotient rings."""


class DivisionByZero(SymdetError, ZeroDivisionError):
    pass


class UnsupportedCharacteristic(SymdetError, ValueError):
    pass


class NotASquare(SymdetError, ValueError):
    pass


class TooLarge(SymdetError, ValueError):
    """An exponential routine was asked for an input beyond its guard."""


class NotAlternating(SymdetError, ValueError):
    pass


class InvalidEntry(SymdetError, ValueError):
    pass


class NonInvertiblePivot(SymdetError, ValueError):
    pass


class NotRepresentable(SymdetError):
    """The polynomial admits no symmetric determinantal representation."""


class ParseError(SymdetError, ValueError):
    pass

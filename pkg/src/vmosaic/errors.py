"""Exception hierarchy shared by every module."""


class VMosaicError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(VMosaicError, ValueError):
    """Malformed .vmos text or Gauss-code text."""


class BadDimensions(ParseError):
    pass


class BadPairing(ParseError):
    pass


class BadCode(VMosaicError, ValueError):
    pass


class EmptyCode(BadCode):
    pass


class NotAConnectionPoint(VMosaicError, ValueError):
    pass


class NotACrossingTile(VMosaicError, ValueError):
    pass


class InvalidMosaic(VMosaicError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class NonIntegerGenus(VMosaicError, AssertionError):
    pass


class NoDiagram(VMosaicError):
    pass


class NotAKnot(VMosaicError):
    pass


class NotACrossingCell(VMosaicError, ValueError):
    pass


class SiteOutOfRange(VMosaicError, ValueError):
    pass


class NotEjectable(VMosaicError):
    def __init__(self, message, cells=()):
        super().__init__(message)
        self.cells = list(cells)


class SearchSpaceTooLarge(VMosaicError):
    pass


class NotFoundWithinBound(VMosaicError):
    pass


class FixtureMissing(VMosaicError):
    pass


class FixtureMismatch(VMosaicError):
    def __init__(self, message, items=()):
        super().__init__(message)
        self.items = list(items)

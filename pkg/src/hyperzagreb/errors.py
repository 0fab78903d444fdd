"""Exception hierarchy.

Every user-facing error derives from :class:`HyperZagrebError`; the CLI maps
those to exit code 2. :class:`InternalIdentityViolation` is deliberately not
part of that family because it means the library itself is broken.
"""


class HyperZagrebError(ValueError):
    """Base class for invalid input of any kind."""


class OutOfRange(HyperZagrebError):
    pass


class SelfLoop(HyperZagrebError):
    pass


class ParseError(HyperZagrebError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IndexOverflow(HyperZagrebError, OverflowError):
    """An index value does not fit a signed 64-bit integer."""


class BadParameter(HyperZagrebError):
    pass


class CompositionError(HyperZagrebError):
    """Raised by the composite builders; ``component`` is the 0-based offender."""

    def __init__(self, message: str, component: int | None = None):
        if component is not None:
            message = f"component {component}: {message}"
        super().__init__(message)
        self.component = component


class EmptyComponentList(CompositionError):
    pass


class AdjacentAnchors(CompositionError, BadParameter):
    pass


class MissingSecondAnchor(CompositionError):
    pass


class MergedMultiEdge(CompositionError):
    pass


class TooFewComponents(HyperZagrebError):
    pass


class InternalIdentityViolation(AssertionError):
    """An algebraic identity between indices failed: an implementation bug."""

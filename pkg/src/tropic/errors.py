"""Exception types shared across the toolkit."""


class TropicError(Exception):
    """Base class for domain errors (bad input, non-generic data, ...)."""


class ParseError(TropicError):
    """Raised on malformed polynomial expressions; carries the offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValuationError(TropicError):
    """Valuation of a series that is zero up to its truncation order."""


class TruncationError(TropicError):
    """A check that cannot be decided at the available truncation order."""


class NonTransverseError(TropicError):
    """Curves share a segment or meet in a vertex; use stable intersection."""


class NonGenericError(TropicError):
    """Point configuration sits on a wall; reseed and retry."""


class NotDecomposableError(TropicError):
    """Curve is not a transverse union of two curves."""

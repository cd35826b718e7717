"""Exception types raised across the package."""


class KscertError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(KscertError):
    """Vectors of incompatible or unsupported dimension."""


class DegenerateError(KscertError):
    """Operation undefined for (projectively) parallel rays."""


class DuplicateRayError(KscertError):
    """A ray set contains projectively coincident rays."""


class RangeError(KscertError):
    """Scalar argument outside its admissible range."""


class OrderTooLowError(KscertError):
    """Pair overlap exceeds the threshold of the requested order."""

    def __init__(self, message: str, suggested_order: int | None = None):
        super().__init__(message)
        self.suggested_order = suggested_order


class InvalidModelError(KscertError):
    """A pair model or assembled structure violates its invariants."""


class NotFkrsError(KscertError):
    """Assembly requested for a ray set that failed the verdict check."""


class UnsupportedAfterDedupError(KscertError):
    """Operation requires bases that do not share rays."""


class HypothesisError(KscertError):
    """Budget bound requested for a set violating its hypothesis."""


class FixtureError(KscertError):
    """Malformed fixture kind or weights."""


class BoundMismatchError(KscertError):
    """Exhaustive search contradicts a value the structure guarantees."""


class InputFormatError(KscertError):
    """Malformed ray-set or certificate file."""

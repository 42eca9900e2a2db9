"""Exception types shared across the package."""


class OrderingBrokenError(ValueError):
    """A point move destroyed the counterclockwise ordering of a configuration."""


class StepTooLargeError(ValueError):
    """Transport deltas exceed the separation bound that guarantees ordering."""


class InvalidGapVectorsError(ValueError):
    """Gap difference vector is not balanced (components must sum to zero)."""


class DegenerateArcError(ValueError):
    """Requested a minimum over an arc of zero length."""


class PiGradeMismatchError(ArithmeticError):
    """Internal bookkeeping of pi powers failed to cancel in an exact formula."""

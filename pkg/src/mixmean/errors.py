"""Exception hierarchy shared by all mixmean modules."""


class MixmeanError(ValueError):
    """Base class; subclasses ValueError so generic callers can catch broadly."""


class EmptyInput(MixmeanError):
    """A mean was evaluated on an empty tuple."""


class NonPositiveInput(MixmeanError):
    """An input violates the positivity domain of the requested mean."""


class LengthMismatch(MixmeanError):
    """Weight function and data vector have different lengths."""


class AllZeroWeights(MixmeanError):
    """A weight function must have at least one strictly positive entry."""


class DimensionMismatch(MixmeanError):
    """Shapes of distributions, sequences or matrices do not agree."""


class OutOfRange(MixmeanError):
    """An integer parameter lies outside its admissible range."""


class HypothesisViolated(MixmeanError):
    """Parameters violate the hypothesis of the invoked construction theorem."""


class InvalidProfile(MixmeanError):
    """A profile matrix fails its defining balance conditions."""


class NotATransition(MixmeanError):
    """A matrix fails the exact row/column marginal identities."""


class OverfullWeights(MixmeanError):
    """Band weights exceed the grid side length."""


class UncertifiedFamilies(MixmeanError):
    """No conjugacy certificate exists or could be found for the given families."""


class UncertifiedPair(MixmeanError):
    """The mean pair is not certified as order-compatible and force was not set."""

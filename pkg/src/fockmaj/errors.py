"""Exception hierarchy shared by all modules."""


class FockMajError(Exception):
    """Base class for library errors."""


class InvalidDistribution(FockMajError, ValueError):
    pass


class NonPassiveInput(FockMajError, ValueError):
    pass


class ParameterOutOfRange(FockMajError, ValueError):
    pass


class CutoffOverflow(FockMajError):
    """Raised when an adaptive truncation would exceed its hard cap."""


class DimensionMismatch(FockMajError, ValueError):
    pass


class TailTooLarge(FockMajError, ValueError):
    """A comparison operand carries more discarded mass than the tolerance allows."""


class PreorderNotEstablished(FockMajError):
    pass


class ParameterNotRational(FockMajError, ValueError):
    pass


class SearchExhausted(FockMajError):
    pass

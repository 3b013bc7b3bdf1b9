"""Exception hierarchy shared by all hopfforge modules."""


class HopfForgeError(Exception):
    """Base class for every error raised by the package."""


class MalformedInputError(HopfForgeError, ValueError):
    pass


class NotAFaceError(HopfForgeError, KeyError):
    pass


class LabelClashError(HopfForgeError, ValueError):
    pass


class NonSimplicialQuotientError(HopfForgeError):
    """The quotient by an involution would identify faces non-simplicially."""


class InvalidCocycleError(HopfForgeError, ValueError):
    pass


class UnsupportedFixedSetError(HopfForgeError):
    pass


class OrderTooLargeError(HopfForgeError):
    pass


class NotACycleError(HopfForgeError, ValueError):
    pass


class NotASubcomplexError(HopfForgeError, ValueError):
    pass


class DegenerateHullError(HopfForgeError):
    """An orientation test stayed indeterminate at maximal precision."""


class StructureError(HopfForgeError):
    pass


class BuildError(HopfForgeError):
    pass


class NoAdaptorNeededError(HopfForgeError, ValueError):
    pass


class SearchBudgetError(HopfForgeError):
    pass


class SearchExhaustedError(HopfForgeError):
    pass


class PolytopeError(HopfForgeError):
    pass


class CorruptedDataError(HopfForgeError):
    pass

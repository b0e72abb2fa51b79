"""Exception types shared across the package."""


class WordMeasuresError(Exception):
    """Base class for all errors raised by this package."""


class RankError(WordMeasuresError):
    """A partition or weight does not fit the requested rank."""


class DegreeMismatch(WordMeasuresError):
    """Symmetric-group objects of different degrees were combined."""


class DomainError(WordMeasuresError):
    """An argument lies outside the mathematical domain of the operation."""


class CapError(WordMeasuresError):
    """An argument exceeds a documented size cap of the implementation."""


class ParseError(WordMeasuresError):
    """A text encoding could not be parsed."""


class TrivialWordError(WordMeasuresError):
    """A word reduced to the identity where a non-trivial word is required."""


class SizeMismatch(WordMeasuresError):
    """Matrix or tuple sizes are inconsistent."""


class NormError(WordMeasuresError):
    """A vector that must be a unit vector is not."""


class UnitarityError(WordMeasuresError):
    """A matrix failed its unitarity (or determinant) tolerance check."""


class PreconditionError(WordMeasuresError):
    """A documented precondition of a check was violated."""


class HypothesisError(WordMeasuresError):
    """The hypothesis of the inequality being tested does not hold."""

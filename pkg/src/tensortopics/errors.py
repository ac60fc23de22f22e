"""Exception hierarchy shared across the package."""


class TensorTopicsError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(TensorTopicsError):
    """Operands have incompatible shapes or vocabulary sizes."""


class EmptyVocabulary(TensorTopicsError):
    """No token survived frequency trimming."""


class SourceUnreadable(TensorTopicsError):
    """A document source could not be read."""


class RankDeficient(TensorTopicsError):
    """Fewer usable singular values than the requested dimension."""


class OracleTooLarge(TensorTopicsError):
    """Dense moment oracle requested above its size guard."""


class NumericalBlowup(TensorTopicsError):
    """An optimization step produced non-finite or zero-norm factors."""


class DegenerateFactor(TensorTopicsError):
    """An unwhitened factor column has (near-)zero norm."""


class DegenerateTopic(TensorTopicsError):
    """A topic row is all zero after sign fixing and clipping."""


class UnknownToken(TensorTopicsError):
    """A token is missing from the co-occurrence index."""


class NotConverged(UserWarning):
    """Fit stopped at the epoch cap; final state is still returned."""

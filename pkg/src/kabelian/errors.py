"""Exception hierarchy shared by all kabelian modules."""


class KabelianError(ValueError):
    """Base class for input errors raised by this package."""


class DimensionMismatch(KabelianError):
    pass


class NotNilpotent(KabelianError):
    pass


class IndexOutOfRange(KabelianError):
    pass


class DiagonalBracket(KabelianError):
    pass


class VectorInDerivedAlgebra(KabelianError):
    pass


class NotAnIdeal(KabelianError):
    pass


class DimensionTooSmall(KabelianError):
    pass


class InadmissibleDimension(KabelianError):
    pass


class MissingParameter(KabelianError):
    pass


class UnexpectedParameter(KabelianError):
    pass


class BoundsViolation(KabelianError):
    pass

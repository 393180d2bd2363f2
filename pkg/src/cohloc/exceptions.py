"""Exception types raised by cohloc."""


class CohlocError(ValueError):
    """Base class for all input/validation errors in this package."""


class NonSquare(CohlocError):
    pass


class NonHermitian(CohlocError):
    pass


class NonUnitTrace(CohlocError):
    pass


class NotPSD(CohlocError):
    pass


class DimensionMismatch(CohlocError):
    pass


class BadRank(CohlocError):
    pass


class NotIsometry(CohlocError):
    pass


class RankMismatch(CohlocError):
    pass


class BadDimension(CohlocError):
    pass


class MissingSplit(CohlocError):
    pass


class WrongDimension(CohlocError):
    pass


class BadEnsembleSize(CohlocError):
    pass

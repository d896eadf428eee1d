"""Exception hierarchy shared by the ladder, ideal and oracle layers."""


class SymLadderError(Exception):
    """Base class for every error raised by this package."""


class LadderError(SymLadderError):
    pass


class OutOfRange(LadderError):
    pass


class EmptyLadder(LadderError):
    pass


class ClosureViolation(LadderError):
    """The symmetric completion is not closed; ``witness`` holds the offending pair."""

    def __init__(self, msg, witness=None, missing=None):
        super().__init__(msg)
        self.witness = witness
        self.missing = missing


class UnrepresentableLadder(LadderError):
    """Closed cell set that no corner data reproduces."""


class MalformedCorners(LadderError):
    pass


class CellNotInLadder(LadderError):
    pass


class IdealError(SymLadderError):
    pass


class PointNotOnBorder(IdealError):
    pass


class MissingUpperOutsideCorner(IdealError):
    def __init__(self, msg, corner=None):
        super().__init__(msg)
        self.corner = corner


class LengthMismatch(IdealError):
    pass


class NonPositiveSize(IdealError):
    pass


class NotNormalized(IdealError):
    pass


class InvalidPivot(IdealError):
    pass


class NoPivot(IdealError):
    """All sizes are 1: the terminal state of a descent, not a failure."""


class PreconditionCornerMissing(IdealError):
    pass


class AlphaOutOfRange(IdealError):
    pass


class MalformedBlocks(IdealError):
    pass


class PolyError(SymLadderError):
    pass


class IndexOutOfRange(PolyError):
    pass


class ResourceBound(PolyError):
    """A Groebner computation hit a configured cap; never a silent pass."""


class CheckFailed(PolyError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class MalformedDocument(SymLadderError):
    """A JSON input document does not have the expected shape."""

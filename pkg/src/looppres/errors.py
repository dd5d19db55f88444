"""Exception types shared across the package."""


class LoopPresError(Exception):
    pass


class RingMismatch(LoopPresError):
    pass


class AlgebraMismatch(LoopPresError):
    pass


class NotHomogeneous(LoopPresError):
    pass


class PreconditionViolated(LoopPresError):
    pass


class ChainConditionViolated(LoopPresError):
    pass


class EmptySubset(LoopPresError):
    pass


class VertexOutOfRange(LoopPresError):
    pass


class UnboundSymbol(LoopPresError):
    pass


class FaceOutsideJ(LoopPresError):
    pass


class NotACycle(LoopPresError):
    pass


class NotFlag(LoopPresError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonIntegralMultiplicity(LoopPresError):
    pass


class NegativeMultiplicity(LoopPresError):
    pass

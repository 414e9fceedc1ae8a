"""Exceptions and small result types shared across modules."""

from __future__ import annotations

from typing import Any, NamedTuple


class AntipodalError(ValueError):
    """Base class for all contract violations raised by this package."""


class EmptyInput(AntipodalError):
    pass


class MixedDimension(AntipodalError):
    pass


class DuplicateVertexInFacet(AntipodalError):
    pass


class NotPseudomanifold(AntipodalError):
    pass


class UnknownVertex(AntipodalError):
    pass


class NotOrderTwo(AntipodalError):
    def __init__(self, msg: str, witness: Any = None):
        super().__init__(msg)
        self.witness = witness


class NotSimplicial(AntipodalError):
    def __init__(self, msg: str, witness: Any = None):
        super().__init__(msg)
        self.witness = witness


class InvolutionNotFree(AntipodalError):
    pass


class BoundaryInvolutionNotFree(InvolutionNotFree):
    pass


class NotManifoldWithBoundary(AntipodalError):
    pass


class BoundaryNotFull(NotManifoldWithBoundary):
    """Some simplex not on the boundary has all of its vertices on the boundary."""


class LabelOutOfRange(AntipodalError):
    pass


class InvalidSignature(AntipodalError):
    pass


class SignatureDimensionMismatch(InvalidSignature):
    pass


class ComplementaryEdgePresent(AntipodalError):
    def __init__(self, msg: str, edge: Any = None):
        super().__init__(msg)
        self.edge = edge


class NotAntipodal(AntipodalError):
    def __init__(self, msg: str, witness: Any = None):
        super().__init__(msg)
        self.witness = witness


class DimensionMismatch(AntipodalError):
    pass


class NotClosedPseudomanifold(AntipodalError):
    pass


class TargetNotStronglyConnected(AntipodalError):
    pass


class VertexUncovered(AntipodalError):
    pass


class InputNotAntipodeFree(AntipodalError):
    pass


class InputNotCovering(AntipodalError):
    pass


class NoWitnessAtThisResolution(AntipodalError):
    pass


class Check(NamedTuple):
    """A boolean verdict with an optional witness explaining a failure."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

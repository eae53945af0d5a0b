"""Exception hierarchy shared by every hypergon module."""


class HypergonError(ValueError):
    """Base class for all domain errors raised by hypergon."""


class OutsideDisk(HypergonError):
    """A coordinate lies outside the closed unit disk."""


class DegenerateSide(HypergonError):
    """Two consecutive vertices coincide."""


class TooFewVertices(HypergonError):
    pass


class NegativeOrientation(HypergonError):
    """Vertices are traversed clockwise and auto-orientation is off."""


class IdealVertex(HypergonError):
    """An operation that needs interior points received a boundary point."""


class SelfIntersecting(HypergonError):
    pass


class OriginOnBoundary(HypergonError):
    pass


class OriginLocationMismatch(HypergonError):
    """The asserted origin location disagrees with the numeric winding number."""


class ZeroVertex(HypergonError):
    pass


class BranchViolation(HypergonError):
    """A side coefficient product lands on the excluded segment [-1, 0]."""


class ToleranceNotMet(HypergonError):
    """Adaptive quadrature exhausted its depth budget."""


class NoFeasibleIterate(HypergonError):
    pass


class InputRange(HypergonError):
    """A parameter is outside the representable range."""

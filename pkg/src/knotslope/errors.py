"""Exception hierarchy shared by all modules."""


class KnotError(ValueError):
    """Base class for every error raised by knotslope."""


class MalformedSyntax(KnotError):
    pass


class LabelOutOfRange(KnotError):
    pass


class LabelMultiplicity(KnotError):
    pass


class MultiComponent(KnotError):
    pass


class NonPlanar(KnotError):
    pass


class ColoringInconsistent(KnotError):
    pass


class IncompleteState(KnotError):
    pass


class TooManyCrossings(KnotError):
    pass


class NonIntegralExponent(KnotError):
    pass


class ZeroPolynomial(KnotError):
    pass


class NotSymmetric(KnotError):
    pass


class DegenerateColoring(KnotError):
    pass


class NotAlternating(KnotError):
    pass


class NotReduced(KnotError):
    pass


class DuplicateName(KnotError):
    pass


# Errors that mean the text parsed but does not describe a planar knot diagram.
GEOMETRY_ERRORS = (NonPlanar, MultiComponent, ColoringInconsistent)

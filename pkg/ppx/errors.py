"""
Exception hierarchy for ppx.

Every error raised on purpose by the library derives from PolygraphError,
which itself is a ValueError so callers that only guard against bad input
keep working.
"""


class PolygraphError(ValueError):
    """Base class for all ppx errors."""


class BoundaryMismatch(PolygraphError):
    """Two arrows were composed or glued along boundaries that differ."""


class UnsupportedClass(PolygraphError):
    """The operation is not available for the class of the polygraph."""


class NotMono(PolygraphError):
    """A polygraphic monomorphism was required."""


class ClosureViolation(PolygraphError):
    """A set of cells is not closed under taking sources and targets."""


class HypothesisFailed(PolygraphError):
    """A checked hypothesis (sigma or positivity preservation) does not hold."""


class MethodDisagreement(PolygraphError):
    """Two independent decision procedures returned different answers."""


class DecompositionMismatch(PolygraphError):
    """The requested split does not match the arrow being lifted."""


class BoundExceeded(PolygraphError):
    """A request goes past the configured size bounds."""


class NotSteinerRepresentable(PolygraphError):
    """Linear data could not be turned back into certified arrow terms."""


class ExtractionFailed(NotSteinerRepresentable):
    """Term extraction from a double sequence failed."""


class NotACell(PolygraphError):
    """The given cell does not exist or has the wrong dimension."""


class GlobularRelationViolated(PolygraphError):
    """The projections of a globular group break the globular relations."""


class BasisMismatch(PolygraphError):
    """Linear combinations over different bases or polygraphs were mixed."""


class PreconditionFailed(PolygraphError):
    """An operation was called outside of its documented domain."""

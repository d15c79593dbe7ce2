"""Exception types shared across the package."""


class TridentError(Exception):
    """Base class for all trident errors."""


class InvalidVertex(TridentError):
    """Vertex index out of range for the graph."""


class SelfLoopRejected(TridentError):
    """An edge (v, v) was supplied; simple graphs have no self-loops."""


class EmptyGraph(TridentError):
    """Operation requires at least one vertex."""


class InvalidCliqueSize(TridentError):
    """Clique size must be a positive integer."""


class InvalidArgument(TridentError):
    """Argument outside the documented domain."""


class IdentityViolation(TridentError):
    """An internal counting identity failed; signals an implementation bug."""


class DegreeExceeded(TridentError):
    """Graph's maximum degree exceeds the declared degree cap."""


class ExhaustiveLimitExceeded(TridentError):
    """Requested exhaustive enumeration beyond the configured vertex limit."""


class TooLargeForCanonicalization(TridentError):
    """Canonical forms are exact only up to the small-n limit."""


class FormatError(TridentError):
    """Malformed graph file or unsupported format."""

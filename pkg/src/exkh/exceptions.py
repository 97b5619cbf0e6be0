"""Error types raised across the package."""


class ExkhError(Exception):
    """Base class for all package errors."""


class MalformedSyntax(ExkhError):
    """PD text contains an unreadable token."""


class EmptyInput(ExkhError):
    """PD input describes no diagram at all."""


class BadEdgeMultiplicity(ExkhError):
    """An edge label does not occur exactly twice."""


class InconsistentOrientation(ExkhError):
    """The code's orientation or planarity structure contradicts itself."""


class CubeTooLarge(ExkhError):
    """The full state cube was requested for a diagram above the cube cap."""

    def __init__(self, n, cap):
        super().__init__(
            f"diagram has {n} crossings, above the cube cap of {cap}; "
            f"the full 2^n state scan is refused"
        )
        self.n = n
        self.cap = cap


class TooManyFaces(ExkhError):
    """Face enumeration exceeded the configured limit."""

    def __init__(self, limit, found, vertices):
        super().__init__(
            f"face enumeration stopped at the limit of {limit} faces "
            f"({found} found so far on {vertices} vertices)"
        )
        self.limit = limit
        self.found = found
        self.vertices = vertices


class NotAComplex(ExkhError):
    """Consecutive differentials do not compose to zero."""

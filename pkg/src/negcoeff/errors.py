"""Exception types shared across the package.

Each error exposes a stable machine-readable code (its class name) so the
CLI can map any failure onto its one-line JSON error contract.
"""


class NegCoeffError(Exception):
    """Base class for every domain error raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class IndexBelowRange(NegCoeffError):
    """A series index k fell at or below the gap index j."""


class NegativeCoefficient(NegCoeffError):
    """A stored coefficient magnitude was negative."""


class WeightsNotConvex(NegCoeffError):
    """Combination weights were not nonnegative with unit sum."""


class MismatchedGapIndex(NegCoeffError):
    """Operands disagree on the gap index j."""


class ParameterOutOfRange(NegCoeffError):
    """A numeric parameter violated its documented domain."""


class InvalidWeightFamily(NegCoeffError):
    """The weight family is not strictly positive on the required range."""


class NotAMember(NegCoeffError):
    """The series fails the coefficient criterion, so it cannot be decomposed."""


class MissingEta(NegCoeffError):
    """The xi product parameter needs the class parameter of the second factor."""


class EmptyGrid(NegCoeffError):
    """A sampling grid contained no usable points."""


class SchemaViolation(NegCoeffError):
    """A JSON document did not match the expected schema."""

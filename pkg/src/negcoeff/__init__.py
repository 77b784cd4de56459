"""Coefficient-criterion toolkit for series with negative coefficients.

Construction and transforms of truncated series z - sum a_k z^k, the
operator weight family behind the membership criterion, sharpness and
extreme-point structure, geometric radii and distortion envelopes, and an
independent disc-sampling oracle that checks every asserted inequality
numerically.
"""

from .errors import (
    EmptyGrid,
    IndexBelowRange,
    InvalidWeightFamily,
    MismatchedGapIndex,
    MissingEta,
    NegCoeffError,
    NegativeCoefficient,
    NotAMember,
    ParameterOutOfRange,
    SchemaViolation,
    WeightsNotConvex,
)
from .geometry import (
    DistortionEnvelope,
    RadiusResult,
    bernardi_univalence_radius,
    distortion_envelope,
    radius,
)
from .membership import (
    Decomposition,
    DeficiencyResult,
    ProductParamResult,
    coeff_bound,
    decompose,
    deficiency,
    extremal,
    product_parameter,
    recompose,
)
from .oracle import (
    MarginReport,
    SampleGrid,
    default_grid,
    distortion_extremes,
    geometry_margin,
    membership_margin,
    transform_univalence_margin,
)
from .series import (
    MODE_DUAL,
    MODE_INTEGRAL,
    NegCoeffSeries,
    apply_operator,
    bernardi,
    convex_combine,
    evaluate,
    hadamard,
    make_series,
    quadratic_combine,
)
from .weights import ClassParams, ValidityReport, dominates, validity, weight

__version__ = "0.1.0"

__all__ = [
    "ClassParams",
    "Decomposition",
    "DeficiencyResult",
    "DistortionEnvelope",
    "EmptyGrid",
    "IndexBelowRange",
    "InvalidWeightFamily",
    "MarginReport",
    "MismatchedGapIndex",
    "MissingEta",
    "MODE_DUAL",
    "MODE_INTEGRAL",
    "NegCoeffError",
    "NegCoeffSeries",
    "NegativeCoefficient",
    "NotAMember",
    "ParameterOutOfRange",
    "ProductParamResult",
    "RadiusResult",
    "SampleGrid",
    "SchemaViolation",
    "ValidityReport",
    "WeightsNotConvex",
    "apply_operator",
    "bernardi",
    "bernardi_univalence_radius",
    "coeff_bound",
    "convex_combine",
    "decompose",
    "default_grid",
    "deficiency",
    "distortion_envelope",
    "distortion_extremes",
    "dominates",
    "evaluate",
    "extremal",
    "geometry_margin",
    "hadamard",
    "make_series",
    "membership_margin",
    "product_parameter",
    "quadratic_combine",
    "radius",
    "recompose",
    "transform_univalence_margin",
    "validity",
    "weight",
]

"""Membership, sharpness, extreme-point structure and product parameters.

The coefficient criterion reads: f belongs to the class of a weight family
w exactly when sigma = sum w(k) a_k <= 1.  Everything in this module is a
consequence of that single inequality, including the solver that certifies
class parameters for coefficientwise products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional

from .errors import (
    IndexBelowRange,
    InvalidWeightFamily,
    MismatchedGapIndex,
    MissingEta,
    NotAMember,
    ParameterOutOfRange,
    WeightsNotConvex,
)
from .series import NegCoeffSeries, make_series
from .weights import (
    TAIL_POSITIVE,
    ClassParams,
    exponent_scale,
    require_valid,
    tail_verdict,
    weight,
    weight_value,
)

# Boundary members (the extremal functions) must classify as members.
MEMBERSHIP_TOL = 1e-12

PRODUCT_KINDS = ("gamma", "xi", "delta", "alpha")


class DeficiencyResult(NamedTuple):
    sigma: float
    member: bool


@dataclass(frozen=True)
class Decomposition:
    """Convex weights of the extreme-point representation: mu_j on the
    identity z plus mu_k on each single-term extremal."""

    mu_j: float
    mus: Mapping[int, float]

    def __post_init__(self) -> None:
        if self.mu_j < 0.0:
            raise WeightsNotConvex(f"mu_j = {self.mu_j} is negative")
        for k in self.mus:
            if not isinstance(k, int) or isinstance(k, bool):
                raise ParameterOutOfRange(f"decomposition index {k!r} is not an integer")
        clean = {k: float(v) for k, v in sorted(self.mus.items())}
        if any(v < 0.0 for v in clean.values()):
            raise WeightsNotConvex("every mu_k must be nonnegative")
        total = self.mu_j + sum(clean.values())
        if abs(total - 1.0) > MEMBERSHIP_TOL:
            raise WeightsNotConvex(f"weights sum to {total!r}, not 1")
        object.__setattr__(self, "mus", clean)


@dataclass(frozen=True)
class ProductParamResult:
    """Class parameter certified for a combined series.

    printed_value is a faithful transcription of the published closed form
    at k = j + 1 (always with negative exponents, whatever the mode); it
    carries no correctness claim.  derived_value comes from the sufficiency
    inequalities and is present exactly when feasible.
    """

    kind: str
    printed_value: float
    derived_value: Optional[float]
    attained_k: Optional[int]
    feasible: bool


def deficiency(f: NegCoeffSeries, p: ClassParams) -> DeficiencyResult:
    """Weighted coefficient sum sigma = sum w(k) a_k and the sigma <= 1 test."""
    if f.j != p.j:
        raise MismatchedGapIndex(f"series gap index {f.j} differs from params j = {p.j}")
    require_valid(p, max(f.K, p.j + 1))
    sigma = sum(weight(k, p) * a for k, a in f.terms.items())
    return DeficiencyResult(sigma, sigma <= 1.0 + MEMBERSHIP_TOL)


def coeff_bound(k: int, p: ClassParams) -> float:
    """Largest admissible magnitude 1 / w(k) for the coefficient at k."""
    w = weight(k, p)
    if not w > 0.0:
        raise InvalidWeightFamily(f"weight at k = {k} is {w}, not positive")
    return 1.0 / w


def extremal(k: int, p: ClassParams) -> NegCoeffSeries:
    """Single-term series saturating the criterion: z - z^k / w(k)."""
    return make_series(p.j, {k: coeff_bound(k, p)})


def decompose(f: NegCoeffSeries, p: ClassParams) -> Decomposition:
    """Convex weights mu_k = w(k) a_k with mu_j absorbing the slack to 1."""
    sigma, member = deficiency(f, p)
    if not member:
        raise NotAMember(f"sigma = {sigma} exceeds 1, series is outside the class")
    mus = {k: weight(k, p) * a for k, a in f.terms.items()}
    return Decomposition(mu_j=max(0.0, 1.0 - sum(mus.values())), mus=mus)


def recompose(d: Decomposition, p: ClassParams) -> NegCoeffSeries:
    """Rebuild the series a_k = mu_k / w(k); inverse of :func:`decompose`."""
    if d.mus:
        require_valid(p, max(d.mus))
    return make_series(p.j, {k: mu / weight(k, p) for k, mu in d.mus.items()})


def _safe_div(num: float, den: float) -> float:
    if den == 0.0:
        return math.nan if num == 0.0 else math.copysign(math.inf, num)
    return num / den


def _printed_product_value(kind: str, p: ClassParams, eta: Optional[float]) -> float:
    """Literal closed-form transcription at k = j + 1.

    Singular parameter points (a vanishing printed denominator) come out as
    inf or nan; they are reported verbatim rather than patched.
    """
    q = float(p.j + 1)
    qn = q ** (-p.n)
    qm = q ** (-p.m)
    br = (p.beta + 1.0) * qm - p.beta
    if kind == "gamma":
        return _safe_div(qn * br * br - qm, qm - 1.0)
    if kind == "delta":
        return _safe_div(q ** (-2.0 * p.n) * br * br - qm, qm - 1.0)
    if kind == "alpha":
        return _safe_div(qn * br * br * qn - 2.0 * qm, 2.0 * qm - 1.0)
    br_eta = (eta + 1.0) * qm - eta
    return _safe_div(qn * br * qn * br_eta - qn, qn - 1.0)


def _family_positive(t: float, p: ClassParams, kmax: int) -> bool:
    if tail_verdict(p.n, p.m, t, p.mode) != TAIL_POSITIVE:
        return False
    return all(weight_value(k, p.n, p.m, t, p.mode) > 0.0 for k in range(p.j + 1, kmax + 1))


def product_parameter(
    kind: str,
    p: ClassParams,
    eta: Optional[float] = None,
    kmax: int = 512,
) -> ProductParamResult:
    """Largest class parameter t certified for a combined series.

    The per-kind sufficiency bound B(k) on the target weight is
    w_beta(k)**2 for the two-factor coefficient product (gamma),
    w_beta(k) * w_eta(k) for factors from two classes (xi),
    w_beta(k)**3 for the triple product (delta) and w_beta(k)**2 / 2 for
    the squared-coefficient combination (alpha).  Each constraint
    w_t(k) <= B(k) is affine in t, so it is solved per k in closed form
    and intersected over k = j+1..kmax.  Feasibility additionally demands
    that the winning family's weights stay positive; one-sided-below
    constraint sets (no largest t) and parameter-free ones report
    feasible = False rather than an infinity.
    """
    if kind not in PRODUCT_KINDS:
        raise ParameterOutOfRange(f"kind must be one of {PRODUCT_KINDS}, got {kind!r}")
    if kind == "xi":
        if eta is None:
            raise MissingEta("kind 'xi' needs eta, the class parameter of the second factor")
        if isinstance(eta, bool) or not isinstance(eta, (int, float)) or not eta >= 0.0:
            raise ParameterOutOfRange(f"eta must be a real number >= 0, got {eta!r}")
        eta = float(eta)
    if not isinstance(kmax, int) or isinstance(kmax, bool) or kmax < p.j + 1:
        raise ParameterOutOfRange(f"kmax = {kmax!r} must be an integer >= j + 1")
    require_valid(p, kmax)
    if kind == "xi":
        require_valid(ClassParams(p.n, p.m, eta, p.j, p.mode), kmax)

    printed = _printed_product_value(kind, p, eta)

    best_u: Optional[float] = None
    best_k: Optional[int] = None
    feasible = True
    for k in range(p.j + 1, kmax + 1):
        wb = weight_value(k, p.n, p.m, p.beta, p.mode)
        if kind == "gamma":
            bound = wb * wb
        elif kind == "xi":
            bound = wb * weight_value(k, p.n, p.m, eta, p.mode)
        elif kind == "delta":
            bound = wb * wb * wb
        else:
            bound = wb * wb / 2.0
        e_n = exponent_scale(k, p.n, p.mode)
        e_m = exponent_scale(k, p.m, p.mode)
        slope = e_n * (e_m - 1.0)
        intercept = e_n * e_m
        if slope == 0.0:
            # m = 0: membership does not depend on t, so "largest t" is
            # meaningless whether or not the fixed constraint holds.
            feasible = False
            break
        if slope < 0.0:
            # Lower bounds only: the feasible set is unbounded above.
            feasible = False
            break
        u = (bound - intercept) / slope
        if best_u is None or u < best_u:
            best_u, best_k = u, k

    if feasible and best_u is not None and not _family_positive(best_u, p, kmax):
        feasible = False
    if not feasible or best_u is None:
        return ProductParamResult(kind, printed, None, None, False)
    return ProductParamResult(kind, printed, best_u, best_k, True)

"""Distortion envelopes and geometric radii derived from the weight family.

Radii are infima over k of terms (factor(k) * w(k)) ** (1 / (k - 1)); the
scan is finite with an early-stop heuristic, and the attaining index is
always reported so callers can check sharpness with the sampling oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import InvalidWeightFamily, ParameterOutOfRange
from .weights import ClassParams, exponent_scale, require_valid, weight

RADIUS_KINDS = ("close_to_convex", "starlike", "convex")
BERNARDI_KIND = "bernardi_univalence"

DEFAULT_KMAX = 512
# Terms tend to 1 as k grows, so a long nondecreasing run above the current
# minimum cannot be undercut later; the full scan remains available.
STOP_STREAK = 32


@dataclass(frozen=True)
class RadiusResult:
    kind: str
    value: float
    attained_k: int
    scanned_to: int
    clipped: bool


@dataclass(frozen=True)
class DistortionEnvelope:
    """Symmetric modulus bounds lower = r - s and upper = r + s at |z| = r."""

    lower: float
    upper: float
    r: float
    i: int
    vacuous_lower: bool


def distortion_envelope(p: ClassParams, i: int, r: float) -> DistortionEnvelope:
    """Envelope r -+ r**(j+1) / D for the i-th operator image, 0 <= i <= n.

    D = (e_n(j+1) / e_i(j+1)) * ((beta + 1) e_m(j+1) - beta).  A negative
    lower bound is vacuous (the modulus is nonnegative anyway); it is
    reported verbatim with the flag set instead of being clamped.
    """
    if not isinstance(i, int) or isinstance(i, bool) or i < 0 or i > p.n:
        raise ParameterOutOfRange(f"operator index i = {i!r} must satisfy 0 <= i <= n = {p.n}")
    if not 0.0 <= r < 1.0:
        raise ParameterOutOfRange(f"radius r = {r!r} must lie in [0, 1)")
    base = p.j + 1
    bracket = (p.beta + 1.0) * exponent_scale(base, p.m, p.mode) - p.beta
    denom = exponent_scale(base, p.n, p.mode) / exponent_scale(base, i, p.mode) * bracket
    if not denom > 0.0:
        raise InvalidWeightFamily(f"envelope denominator {denom} at k = {base} is not positive")
    spread = r ** (p.j + 1) / denom
    lower = r - spread
    return DistortionEnvelope(lower, r + spread, r, i, lower < 0.0)


def _scan_infimum(
    term: Callable[[int], float], j: int, kmax: int, full_scan: bool
) -> tuple[float, int, int]:
    best = best_k = None
    prev = None
    streak = 0
    scanned = j
    for k in range(j + 1, kmax + 1):
        t = term(k)
        scanned = k
        if best is None or t < best:
            best, best_k = t, k
        streak = streak + 1 if prev is not None and t >= prev else 0
        prev = t
        if not full_scan and streak >= STOP_STREAK and t > best:
            break
    return best, best_k, scanned


_FACTORS = {
    "close_to_convex": lambda k, rho: (1.0 - rho) / k,
    "starlike": lambda k, rho: (1.0 - rho) / (k - rho),
    "convex": lambda k, rho: (1.0 - rho) / (k * (k - rho)),
}


def radius(
    kind: str,
    p: ClassParams,
    rho: float,
    kmax: int = DEFAULT_KMAX,
    full_scan: bool = False,
) -> RadiusResult:
    """Scanned infimum radius for the requested geometric property of order rho.

    Ties go to the smallest attaining k.  clipped marks values above 1,
    where the bound exceeds the unit disc.
    """
    if kind not in _FACTORS:
        raise ParameterOutOfRange(f"kind must be one of {RADIUS_KINDS}, got {kind!r}")
    if not 0.0 <= rho < 1.0:
        raise ParameterOutOfRange(f"order rho = {rho!r} must lie in [0, 1)")
    _check_kmax(kmax, p)
    require_valid(p, kmax)
    factor = _FACTORS[kind]
    value, attained, scanned = _scan_infimum(
        lambda k: (factor(k, rho) * weight(k, p)) ** (1.0 / (k - 1)), p.j, kmax, full_scan
    )
    return RadiusResult(kind, value, attained, scanned, value > 1.0)


def bernardi_univalence_radius(
    p: ClassParams,
    c: float,
    kmax: int = DEFAULT_KMAX,
    full_scan: bool = False,
) -> RadiusResult:
    """Scanned infimum of ((c+1) w(k) / (k (c+k))) ** (1/(k-1)), c > -1."""
    if not c > -1.0:
        raise ParameterOutOfRange(f"transform parameter c must exceed -1, got {c!r}")
    _check_kmax(kmax, p)
    require_valid(p, kmax)
    value, attained, scanned = _scan_infimum(
        lambda k: ((c + 1.0) * weight(k, p) / (k * (c + k))) ** (1.0 / (k - 1)),
        p.j,
        kmax,
        full_scan,
    )
    return RadiusResult(BERNARDI_KIND, value, attained, scanned, value > 1.0)


def _check_kmax(kmax: int, p: ClassParams) -> None:
    if not isinstance(kmax, int) or isinstance(kmax, bool) or kmax < p.j + 1:
        raise ParameterOutOfRange(f"kmax = {kmax!r} must be an integer >= j + 1")

"""The operator weight family w(k) behind the coefficient criterion.

w(k) = e_n(k) * ((beta + 1) * e_m(k) - beta), with e_p(k) = k**(-p) in
integral mode and k**p in dual mode.  Membership, coefficient bounds,
radii and the product-parameter solver are all expressed through this one
family, so its positivity domain and the dominance order between
parameter points are first-class citizens here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    IndexBelowRange,
    InvalidWeightFamily,
    MismatchedGapIndex,
    ParameterOutOfRange,
)
from .series import MODE_INTEGRAL, MODES, check_mode

# Weights are products of small integer powers; this absorbs rounding at
# large k without letting a genuinely larger weight pass as dominated.
DOMINANCE_TOL = 1e-15

TAIL_POSITIVE = "positive"
TAIL_NEGATIVE = "negative"
TAIL_INCONCLUSIVE = "inconclusive"


def _check_nonneg_int(value: object, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ParameterOutOfRange(f"{name} must be a nonnegative integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ClassParams:
    """Identifies one weight family: exponents n and m, the slope parameter
    beta >= 0, gap index j and the exponent-sign mode."""

    n: int
    m: int
    beta: float
    j: int
    mode: str

    def __post_init__(self) -> None:
        _check_nonneg_int(self.n, "n")
        _check_nonneg_int(self.m, "m")
        if not isinstance(self.j, int) or isinstance(self.j, bool) or self.j < 1:
            raise ParameterOutOfRange(f"j must be a positive integer, got {self.j!r}")
        if isinstance(self.beta, bool) or not isinstance(self.beta, (int, float)):
            raise ParameterOutOfRange(f"beta must be a real number, got {self.beta!r}")
        beta = float(self.beta)
        if not math.isfinite(beta) or beta < 0.0:
            raise ParameterOutOfRange(f"beta must be finite and >= 0, got {self.beta!r}")
        object.__setattr__(self, "beta", beta)
        check_mode(self.mode)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the positivity scan plus the analytic tail verdict."""

    valid: bool
    first_failure_k: Optional[int]
    scanned_to: int
    tail_verdict: str


def exponent_scale(k: int, p: int, mode: str) -> float:
    """e_p(k): k**(-p) in integral mode, k**p in dual mode."""
    return float(k) ** (-p if mode == MODE_INTEGRAL else p)


def weight_value(k: int, n: int, m: int, param: float, mode: str) -> float:
    """Raw weight formula, with no sign restriction on the slope parameter.

    Exposed separately from :func:`weight` because the product-parameter
    solver needs to probe candidate parameters that may be negative.
    """
    return exponent_scale(k, n, mode) * ((param + 1.0) * exponent_scale(k, m, mode) - param)


def weight(k: int, p: ClassParams) -> float:
    """w(k) for the family p; k must lie above the gap index."""
    if not isinstance(k, int) or isinstance(k, bool) or k < p.j + 1:
        raise IndexBelowRange(f"k = {k!r} must be an integer >= j + 1 = {p.j + 1}")
    return weight_value(k, p.n, p.m, p.beta, p.mode)


def tail_verdict(n: int, m: int, param: float, mode: str) -> str:
    """Sign of w(k) for large k, read off the bracket's dominant term.

    With m = 0 the bracket is identically 1.  Otherwise the integral-mode
    bracket tends to -param and the dual-mode bracket is dominated by
    (1 + param) * k**m.
    """
    if m == 0:
        return TAIL_POSITIVE
    if mode == MODE_INTEGRAL:
        return TAIL_NEGATIVE if param > 0.0 else TAIL_POSITIVE
    return TAIL_NEGATIVE if param < -1.0 else TAIL_POSITIVE


def validity(p: ClassParams, K: int) -> ValidityReport:
    """Scan w(k) > 0 for k = j+1..K and fold in the tail verdict.

    The analytic tail check prevents a small K from reporting valid for a
    family whose weights go negative further out.
    """
    if not isinstance(K, int) or isinstance(K, bool) or K < p.j + 1:
        raise ParameterOutOfRange(f"scan limit K = {K!r} must be an integer >= j + 1")
    first = None
    scanned = p.j
    for k in range(p.j + 1, K + 1):
        scanned = k
        if not weight(k, p) > 0.0:
            first = k
            break
    tail = tail_verdict(p.n, p.m, p.beta, p.mode)
    return ValidityReport(
        valid=first is None and tail == TAIL_POSITIVE,
        first_failure_k=first,
        scanned_to=scanned,
        tail_verdict=tail,
    )


def require_valid(p: ClassParams, K: int) -> None:
    """Raise InvalidWeightFamily unless p's weights are positive up to K."""
    report = validity(p, K)
    if not report.valid:
        where = (
            f"first failure at k = {report.first_failure_k}"
            if report.first_failure_k is not None
            else f"tail verdict {report.tail_verdict}"
        )
        raise InvalidWeightFamily(
            f"weight family n={p.n}, m={p.m}, beta={p.beta}, mode={p.mode} "
            f"is not positive up to K={K} ({where})"
        )


def dominates(p1: ClassParams, p2: ClassParams, K: int) -> bool:
    """True when w1(k) <= w2(k) for every k = j+1..K, within DOMINANCE_TOL.

    Dominance transfers membership: a series passing the criterion for p2
    also passes it for p1, because the weighted sum can only shrink.
    """
    if p1.j != p2.j:
        raise MismatchedGapIndex(f"gap indices differ: {p1.j} vs {p2.j}")
    require_valid(p1, K)
    require_valid(p2, K)
    return all(weight(k, p1) <= weight(k, p2) + DOMINANCE_TOL for k in range(p1.j + 1, K + 1))

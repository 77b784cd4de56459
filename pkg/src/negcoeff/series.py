"""Truncated series f(z) = z - sum_{k>j} a_k z^k with a_k >= 0.

Coefficients are stored as nonnegative magnitudes and the minus sign is
applied at evaluation time, which makes the negative-coefficient shape a
type invariant instead of a convention.  All series are finitely supported
and every transform below acts termwise, so the transforms are exact on
this representation.  Values are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    IndexBelowRange,
    MismatchedGapIndex,
    NegativeCoefficient,
    ParameterOutOfRange,
    WeightsNotConvex,
)

MODE_INTEGRAL = "integral"
MODE_DUAL = "dual"
MODES = (MODE_INTEGRAL, MODE_DUAL)

CONVEX_SUM_TOL = 1e-12


def _check_index(k: object) -> int:
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterOutOfRange(f"series index {k!r} is not an integer")
    return k


@dataclass(frozen=True)
class NegCoeffSeries:
    """A function z - sum a_k z^k, held as the gap index j and a k -> a_k map.

    Absent keys denote zero coefficients; explicit zeros are dropped at
    construction, so equal functions compare equal.  The identity member
    f(z) = z is the empty map.
    """

    j: int
    terms: Mapping[int, float]

    def __post_init__(self) -> None:
        if not isinstance(self.j, int) or isinstance(self.j, bool) or self.j < 1:
            raise ParameterOutOfRange(f"gap index j must be a positive integer, got {self.j!r}")
        clean: dict[int, float] = {}
        for k in sorted(_check_index(k) for k in self.terms):
            a = self.terms[k]
            if isinstance(a, bool) or not isinstance(a, (int, float)):
                raise ParameterOutOfRange(f"coefficient a_{k} must be a real number, got {a!r}")
            a = float(a)
            if not math.isfinite(a):
                raise ParameterOutOfRange(f"coefficient a_{k} must be finite")
            if a < 0.0:
                raise NegativeCoefficient(f"coefficient a_{k} = {a} is negative")
            if k <= self.j:
                raise IndexBelowRange(f"index {k} must exceed the gap index j = {self.j}")
            if a != 0.0:
                clean[k] = a
        object.__setattr__(self, "terms", clean)

    @property
    def K(self) -> int:
        """Truncation index: the largest stored k, or j for the identity z."""
        return max(self.terms) if self.terms else self.j


def make_series(j: int, terms: Mapping[int, float]) -> NegCoeffSeries:
    """Validated construction from a gap index and a k -> a_k map."""
    return NegCoeffSeries(j, dict(terms))


IDENTITY_ORDER, FIRST_ORDER, SECOND_ORDER = 0, 1, 2


def evaluate(f: NegCoeffSeries, z, order: int = 0):
    """Evaluate f, f' or f'' at z by termwise summation.

    ``z`` may be a complex scalar or a numpy array of points.  The series is
    a polynomial, so evaluation is defined on the whole plane; restricting
    to the unit disc is the caller's concern.
    """
    if order not in (0, 1, 2):
        raise ParameterOutOfRange(f"derivative order must be 0, 1 or 2, got {order!r}")
    acc = z * 0.0
    if order == 0:
        for k, a in f.terms.items():
            acc = acc + a * z**k
        return z - acc
    if order == 1:
        for k, a in f.terms.items():
            acc = acc + (k * a) * z ** (k - 1)
        return 1.0 - acc
    for k, a in f.terms.items():
        acc = acc + (k * (k - 1) * a) * z ** (k - 2)
    return -acc


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ParameterOutOfRange(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def apply_operator(f: NegCoeffSeries, p: int, mode: str) -> NegCoeffSeries:
    """Scale each a_k by k**(-p) in integral mode or k**p in dual mode.

    p = 0 is the identity in either mode, and applying p then q equals
    applying p + q directly.
    """
    if not isinstance(p, int) or isinstance(p, bool) or p < 0:
        raise ParameterOutOfRange(f"operator power must be a nonnegative integer, got {p!r}")
    check_mode(mode)
    if p == 0:
        return f
    sign = -p if mode == MODE_INTEGRAL else p
    return NegCoeffSeries(f.j, {k: a * float(k) ** sign for k, a in f.terms.items()})


def hadamard(f1: NegCoeffSeries, f2: NegCoeffSeries) -> NegCoeffSeries:
    """Coefficientwise product.  The result takes the larger gap index,
    which is sound because the product's support lies in the intersection
    of the operands' supports."""
    prod = {k: a * f2.terms[k] for k, a in f1.terms.items() if k in f2.terms}
    return NegCoeffSeries(max(f1.j, f2.j), prod)


def convex_combine(fs: Sequence[NegCoeffSeries], lambdas: Sequence[float]) -> NegCoeffSeries:
    """Coefficientwise convex combination of series sharing one gap index."""
    if not fs or len(fs) != len(lambdas):
        raise WeightsNotConvex("need one weight per series and at least one series")
    if any(lam < 0.0 for lam in lambdas):
        raise WeightsNotConvex("combination weights must be nonnegative")
    total = sum(lambdas)
    if abs(total - 1.0) > CONVEX_SUM_TOL:
        raise WeightsNotConvex(f"combination weights sum to {total!r}, not 1")
    j = fs[0].j
    if any(f.j != j for f in fs):
        raise MismatchedGapIndex("all series in a combination must share the gap index")
    combined: dict[int, float] = {}
    for f, lam in zip(fs, lambdas):
        for k, a in f.terms.items():
            combined[k] = combined.get(k, 0.0) + lam * a
    return NegCoeffSeries(j, combined)


def bernardi(f: NegCoeffSeries, c: float) -> NegCoeffSeries:
    """Coefficient map a_k -> ((c + 1) / (c + k)) a_k, defined for c > -1.

    Every factor lies in (0, 1) for k >= 2, so the transform shrinks each
    coefficient strictly unless it is zero.
    """
    if not c > -1.0:
        raise ParameterOutOfRange(f"transform parameter c must exceed -1, got {c!r}")
    return NegCoeffSeries(f.j, {k: (c + 1.0) / (c + k) * a for k, a in f.terms.items()})


def quadratic_combine(f1: NegCoeffSeries, f2: NegCoeffSeries) -> NegCoeffSeries:
    """Series with coefficient a_{k,1}**2 + a_{k,2}**2 at each index."""
    if f1.j != f2.j:
        raise MismatchedGapIndex(f"gap indices differ: {f1.j} vs {f2.j}")
    out: dict[int, float] = {}
    for k in set(f1.terms) | set(f2.terms):
        a1 = f1.terms.get(k, 0.0)
        a2 = f2.terms.get(k, 0.0)
        out[k] = a1 * a1 + a2 * a2
    return NegCoeffSeries(f1.j, out)

"""Disc-sampling margins for the analytic conditions behind the closed forms.

Margins here are computed from series evaluation alone, never from the
coefficient criterion, so the two routes stay independent and can falsify
each other.  A nonnegative margin on a finite grid means "no violation
found", never a proof; violations concentrate near the positive real axis,
hence the dedicated refinement points there.

Reductions are deterministic: samples are laid out in a fixed order and the
first minimizer wins ties, so concurrent evaluation strategies must
preserve that reduction order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyGrid, ParameterOutOfRange
from .series import NegCoeffSeries, apply_operator, check_mode, evaluate
from .weights import ClassParams

# Below this relative size the ratio denominator is numerically meaningless;
# such samples are flagged and excluded from the minimum, not folded in.
DEGENERATE_REL_TOL = 1e-12

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99)
DEFAULT_ANGLES = 256
DEFAULT_REAL_AXIS = (0.9, 0.99, 0.999, 0.9999)

MIN_GEOMETRY_ANGLES = 8

GEOMETRY_KINDS = ("close_to_convex", "starlike", "convex")


@dataclass(frozen=True)
class SampleGrid:
    """Circles of equally spaced angles plus real-axis refinement points."""

    radii: tuple[float, ...]
    angles: int
    real_axis_refinement: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        refine = tuple(float(r) for r in self.real_axis_refinement)
        if not isinstance(self.angles, int) or isinstance(self.angles, bool) or self.angles < 1:
            raise ParameterOutOfRange(f"angles must be a positive integer, got {self.angles!r}")
        for r in radii + refine:
            if not 0.0 < r < 1.0:
                raise ParameterOutOfRange(f"grid radius {r!r} must lie in (0, 1)")
        if any(a >= b for a, b in zip(radii, radii[1:])):
            raise ParameterOutOfRange("grid radii must be strictly increasing")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "real_axis_refinement", refine)


def default_grid() -> SampleGrid:
    return SampleGrid(DEFAULT_RADII, DEFAULT_ANGLES, DEFAULT_REAL_AXIS)


@dataclass(frozen=True)
class MarginReport:
    """Minimum slack of an asserted inequality over the sampled points."""

    margin: float
    worst_z: complex
    degenerate_samples: int


def circle_points(r: float, angles: int) -> np.ndarray:
    return r * np.exp(2j * np.pi * np.arange(angles) / angles)


def grid_points(grid: SampleGrid) -> np.ndarray:
    """All samples in reduction order: circles by increasing radius, each
    swept by ascending angle index, then the real-axis refinement."""
    chunks = [circle_points(r, grid.angles) for r in grid.radii]
    chunks.append(np.asarray(grid.real_axis_refinement, dtype=complex))
    return np.concatenate(chunks)


def reduce_margin(slack: np.ndarray, degenerate: np.ndarray, points: np.ndarray) -> MarginReport:
    """Fold per-sample slacks into a report; first minimizer wins ties."""
    if points.size == 0:
        raise EmptyGrid("no sample points")
    if bool(np.all(degenerate)):
        raise EmptyGrid("every sample had a degenerate denominator")
    masked = np.where(degenerate, np.inf, slack)
    idx = int(np.argmin(masked))
    return MarginReport(
        margin=float(masked[idx]),
        worst_z=complex(points[idx]),
        degenerate_samples=int(np.count_nonzero(degenerate)),
    )


def membership_slacks(
    f: NegCoeffSeries, p: ClassParams, z: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample slack Re(ratio) - beta |ratio - 1| of the class condition,
    where ratio divides the (n+m)-fold operator image by the n-fold one."""
    num = evaluate(apply_operator(f, p.n + p.m, p.mode), z)
    den = evaluate(apply_operator(f, p.n, p.mode), z)
    degenerate = np.abs(den) < DEGENERATE_REL_TOL * np.abs(z)
    ratio = num / np.where(degenerate, 1.0, den)
    slack = ratio.real - p.beta * np.abs(ratio - 1.0)
    return slack, degenerate


def membership_margin(f: NegCoeffSeries, p: ClassParams, grid: SampleGrid) -> MarginReport:
    pts = grid_points(grid)
    slack, degenerate = membership_slacks(f, p, pts)
    return reduce_margin(slack, degenerate, pts)


def geometry_slacks(
    kind: str, f: NegCoeffSeries, rho: float, z: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample slack (1 - rho) - |expression(z)| for one geometric test.

    close_to_convex uses f'(z) - 1, starlike uses z f'(z) / f(z) - 1 and
    convex uses z f''(z) / f'(z).
    """
    if kind == "close_to_convex":
        slack = (1.0 - rho) - np.abs(evaluate(f, z, 1) - 1.0)
        return slack, np.zeros(np.shape(z), dtype=bool)
    if kind == "starlike":
        val = evaluate(f, z)
        degenerate = np.abs(val) < DEGENERATE_REL_TOL * np.abs(z)
        expr = z * evaluate(f, z, 1) / np.where(degenerate, 1.0, val) - 1.0
        return (1.0 - rho) - np.abs(expr), degenerate
    if kind == "convex":
        d1 = evaluate(f, z, 1)
        degenerate = np.abs(d1) < DEGENERATE_REL_TOL * np.abs(z)
        expr = z * evaluate(f, z, 2) / np.where(degenerate, 1.0, d1)
        return (1.0 - rho) - np.abs(expr), degenerate
    raise ParameterOutOfRange(f"kind must be one of {GEOMETRY_KINDS}, got {kind!r}")


def geometry_margin(
    kind: str, f: NegCoeffSeries, rho: float, r: float, angles: int = DEFAULT_ANGLES
) -> MarginReport:
    if not 0.0 <= rho < 1.0:
        raise ParameterOutOfRange(f"order rho = {rho!r} must lie in [0, 1)")
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius r = {r!r} must lie in (0, 1)")
    if not isinstance(angles, int) or isinstance(angles, bool) or angles < MIN_GEOMETRY_ANGLES:
        raise EmptyGrid(f"need at least {MIN_GEOMETRY_ANGLES} angles, got {angles!r}")
    pts = circle_points(r, angles)
    slack, degenerate = geometry_slacks(kind, f, rho, pts)
    return reduce_margin(slack, degenerate, pts)


def transform_slacks(gfun: NegCoeffSeries, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample slack 1 - |G'(z) - 1| of the univalence condition."""
    slack = 1.0 - np.abs(evaluate(gfun, z, 1) - 1.0)
    return slack, np.zeros(np.shape(z), dtype=bool)


def transform_univalence_margin(
    gfun: NegCoeffSeries, r: float, angles: int = DEFAULT_ANGLES
) -> MarginReport:
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius r = {r!r} must lie in (0, 1)")
    if not isinstance(angles, int) or isinstance(angles, bool) or angles < 1:
        raise EmptyGrid(f"need at least one angle, got {angles!r}")
    pts = circle_points(r, angles)
    slack, degenerate = transform_slacks(gfun, pts)
    return reduce_margin(slack, degenerate, pts)


def distortion_extremes(
    f: NegCoeffSeries, i: int, r: float, mode: str, angles: int = DEFAULT_ANGLES
) -> tuple[float, float]:
    """(min, max) of the i-th operator image's modulus over |z| = r."""
    if not isinstance(i, int) or isinstance(i, bool) or i < 0:
        raise ParameterOutOfRange(f"operator index i = {i!r} must be a nonnegative integer")
    if not 0.0 <= r < 1.0:
        raise ParameterOutOfRange(f"radius r = {r!r} must lie in [0, 1)")
    check_mode(mode)
    if not isinstance(angles, int) or isinstance(angles, bool) or angles < 1:
        raise EmptyGrid(f"need at least one angle, got {angles!r}")
    values = np.abs(evaluate(apply_operator(f, i, mode), circle_points(r, angles)))
    return float(values.min()), float(values.max())

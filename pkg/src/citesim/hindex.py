"""h-index of a lognormal citation system.

In the continuous approximation the h-index is the fixed point of the
exceedance count: the value h at which exactly h papers are expected to
have at least h citations. The exceedance count is strictly decreasing
while the identity grows, so the fixed point is unique in (0, N); it is
found here by a bracketing solver. A closed-form large-N approximation,
exp(sigma sqrt(2 ln N)), is provided alongside for curve comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lognormal import LognormalParams, SeriesSpec, expected_exceeding
from .roots import brentq


@dataclass(frozen=True)
class HSolution:
    """Fixed point of the exceedance count for one series."""

    h_continuous: float
    h_reported: int
    residual: float
    iterations: int


@dataclass(frozen=True)
class HCurve:
    """h versus paper count over a geometric grid, optionally with the
    closed-form approximation evaluated in parallel."""

    params: LognormalParams
    n_papers: tuple[int, ...]
    h_exact: tuple[float, ...]
    h_asymptotic: tuple[float, ...] | None = None


def solve_h(spec: SeriesSpec, tolerance: float = 1e-9) -> HSolution:
    """Solve for the h fixed point of `spec`.

    `tolerance` bounds the residual |F(h) - h| at the returned solution,
    in units of papers. The bracket (~0, N] always straddles the root:
    the gap F(h) - h starts near N and ends below zero at h = N.
    """
    if not (tolerance > 0.0):
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    n = spec.n_papers

    def gap(h: float) -> float:
        return expected_exceeding(h, spec) - h

    lo = 1e-9 * n
    hi = float(n)
    if gap(lo) < 0.0 or gap(hi) > 0.0:
        raise RuntimeError(f"bracket failure for {spec}; the model is not solvable")
    root, iterations = brentq(gap, lo, hi, xtol=max(1e-16 * n, 5e-324))
    residual = abs(gap(root))
    if residual > tolerance:
        raise RuntimeError(
            f"solver residual {residual:.3e} exceeds tolerance {tolerance:.3e} for {spec}"
        )
    return HSolution(
        h_continuous=root,
        h_reported=int(math.floor(root + 0.5)),
        residual=residual,
        iterations=iterations,
    )


def h_asymptotic(spec: SeriesSpec) -> float:
    """Large-N approximation exp(sigma sqrt(2 ln N)).

    Independent of mu by construction; accurate to ~15% against the exact
    fixed point for large paper counts, degrading for small N.
    """
    if spec.n_papers < 2:
        raise ValueError("the asymptotic form needs at least 2 papers")
    return math.exp(spec.params.sigma * math.sqrt(2.0 * math.log(spec.n_papers)))


def h_curve(
    params: LognormalParams,
    n_min: int,
    n_max: int,
    points: int = 50,
    with_asymptotic: bool = False,
) -> HCurve:
    """h versus N over a geometric grid of `points` paper counts.

    Grid values are rounded to integers and deduplicated, so fewer than
    `points` entries can come back for narrow ranges; the endpoints are
    always present.
    """
    if n_min < 1:
        raise ValueError(f"n_min must be at least 1, got {n_min}")
    if n_min >= n_max:
        raise ValueError(f"need n_min < n_max, got [{n_min}, {n_max}]")
    if points < 2:
        raise ValueError(f"need at least 2 grid points, got {points}")
    if with_asymptotic and n_min < 2:
        raise ValueError("the asymptotic curve needs n_min >= 2")

    grid = _geometric_grid(n_min, n_max, points)
    h_exact = tuple(solve_h(SeriesSpec(params, n)).h_continuous for n in grid)
    asym = None
    if with_asymptotic:
        asym = tuple(h_asymptotic(SeriesSpec(params, n)) for n in grid)
    return HCurve(params=params, n_papers=tuple(grid), h_exact=h_exact, h_asymptotic=asym)


def _geometric_grid(n_min: int, n_max: int, points: int) -> list[int]:
    log_lo = math.log(n_min)
    step = (math.log(n_max) - log_lo) / (points - 1)
    grid: list[int] = []
    for k in range(points):
        n = int(math.floor(math.exp(log_lo + k * step) + 0.5))
        n = min(max(n, n_min), n_max)
        if not grid or n > grid[-1]:
            grid.append(n)
    return grid

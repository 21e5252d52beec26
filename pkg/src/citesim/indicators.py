"""Per-series indicator suites and the default 30-series study.

A series' indicator suite collects total citations, the h-index, their
size-independent ratios, and tail probabilities / expected exceedance
counts at a set of citation thresholds, either from the closed-form
model or from replicate-averaged simulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hindex import solve_h
from .lognormal import (
    DEFAULT_THRESHOLDS,
    SeriesSpec,
    ThresholdSet,
    expected_exceeding,
    survival_probability,
    total_citations,
)
from .montecarlo import DEFAULT_SEED, run_replicates
from .reference import REFERENCE_ROWS

Y_INDICATORS = ("h", "h_over_n", "sum_c", "sum_c_over_n")
X_AXES = ("f_at", "p_at")


@dataclass(frozen=True)
class SeriesMetrics:
    """Indicator suite for one series.

    `h` is the continuous fixed point in analytic mode and the replicate
    mean in simulated mode; presentation rounding is left to callers.
    """

    spec: SeriesSpec
    sum_citations: float
    h: float
    h_over_n: float
    mean_citations: float
    p_at: dict[float, float]
    f_at: dict[float, float]
    source: str


@dataclass(frozen=True)
class StudyTable:
    """Ordered collection of series metrics."""

    rows: tuple[SeriesMetrics, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def metrics_analytic(spec: SeriesSpec, thresholds: ThresholdSet = DEFAULT_THRESHOLDS) -> SeriesMetrics:
    """Closed-form indicator suite for `spec`."""
    n = spec.n_papers
    sum_c = total_citations(spec)
    h = solve_h(spec).h_continuous
    p_at = {x: survival_probability(x, spec.params) for x in thresholds}
    return SeriesMetrics(
        spec=spec,
        sum_citations=sum_c,
        h=h,
        h_over_n=h / n,
        mean_citations=sum_c / n,
        p_at=p_at,
        f_at={x: n * p for x, p in p_at.items()},
        source="analytic",
    )


def metrics_simulated(
    spec: SeriesSpec,
    thresholds: ThresholdSet = DEFAULT_THRESHOLDS,
    replicates: int = 10_000,
    seed: int = DEFAULT_SEED,
) -> SeriesMetrics:
    """Replicate-averaged indicator suite for `spec`."""
    summary = run_replicates(spec, replicates, thresholds, seed)
    n = spec.n_papers
    return SeriesMetrics(
        spec=spec,
        sum_citations=summary.sum_citations_mean,
        h=summary.h_mean,
        h_over_n=summary.h_mean / n,
        mean_citations=summary.sum_citations_mean / n,
        p_at={x: f / n for x, f in summary.counts_above.items()},
        f_at=dict(summary.counts_above),
        source="simulated",
    )


def study_specs() -> tuple[SeriesSpec, ...]:
    """The 30 series specs of the canonical study, in series order."""
    return tuple(SeriesSpec.from_values(r.mu, r.sigma, r.n_papers) for r in REFERENCE_ROWS)


@lru_cache(maxsize=1)
def default_study() -> StudyTable:
    """Analytic metrics for the canonical 30-series study."""
    return StudyTable(tuple(metrics_analytic(spec) for spec in study_specs()))


def scatter_dataset(
    table: StudyTable,
    y_indicator: str,
    x_axis: str,
    threshold: float,
) -> list[tuple[float, float]]:
    """(x, y) pairs for every row of `table`, in row order.

    `y_indicator` picks one of h, h_over_n, sum_c, sum_c_over_n;
    `x_axis` picks expected exceedance counts (f_at) or probabilities
    (p_at) at `threshold`. Thresholds missing from a row's stored maps
    (such as 30) are computed on demand from the row's spec.
    """
    if y_indicator not in Y_INDICATORS:
        raise ValueError(f"unknown indicator {y_indicator!r}; expected one of {Y_INDICATORS}")
    if x_axis not in X_AXES:
        raise ValueError(f"unknown axis {x_axis!r}; expected one of {X_AXES}")
    return [
        (_axis_value(row, x_axis, threshold), indicator_value(row, y_indicator))
        for row in table.rows
    ]


def indicator_value(row: SeriesMetrics, name: str) -> float:
    """One named indicator from a metrics row."""
    if name == "h":
        return row.h
    if name == "h_over_n":
        return row.h_over_n
    if name == "sum_c":
        return row.sum_citations
    if name == "sum_c_over_n":
        return row.mean_citations
    raise ValueError(f"unknown indicator {name!r}; expected one of {Y_INDICATORS}")


def _axis_value(row: SeriesMetrics, axis: str, threshold: float) -> float:
    stored = row.p_at if axis == "p_at" else row.f_at
    if threshold in stored:
        return stored[threshold]
    if axis == "p_at":
        return survival_probability(threshold, row.spec.params)
    return expected_exceeding(threshold, row.spec)

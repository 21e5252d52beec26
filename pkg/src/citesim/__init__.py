"""Lognormal citation modelling toolkit.

Models a research system's citations as a lognormal distribution,
computes the h-index it implies (the fixed point of the exceedance
count), simulates synthetic citation series, and compares bibliometric
indicators through fits and correlations.
"""

from .hindex import HCurve, HSolution, h_asymptotic, h_curve, solve_h
from .indicators import (
    SeriesMetrics,
    StudyTable,
    default_study,
    indicator_value,
    metrics_analytic,
    metrics_simulated,
    scatter_dataset,
    study_specs,
)
from .lognormal import (
    DEFAULT_THRESHOLDS,
    LognormalParams,
    SeriesSpec,
    ThresholdSet,
    expected_exceeding,
    mean_citations,
    number_density,
    pdf,
    survival_probability,
    total_citations,
)
from .montecarlo import (
    DEFAULT_SEED,
    CitationSample,
    ReplicateSummary,
    averaged_rank_frequency,
    derive_seed,
    discretize,
    empirical_counts,
    empirical_h,
    run_replicates,
    sample_series,
)
from .output import OutputFormat
from .special import erf, erfc
from .stats import LinearFit, PowerLawFit, fit_linear, fit_power_law, pearson, power_transform

__version__ = "0.1.0"

__all__ = [
    "CitationSample",
    "DEFAULT_SEED",
    "DEFAULT_THRESHOLDS",
    "HCurve",
    "HSolution",
    "LinearFit",
    "LognormalParams",
    "OutputFormat",
    "PowerLawFit",
    "ReplicateSummary",
    "SeriesMetrics",
    "SeriesSpec",
    "StudyTable",
    "ThresholdSet",
    "averaged_rank_frequency",
    "default_study",
    "derive_seed",
    "discretize",
    "empirical_counts",
    "empirical_h",
    "erf",
    "erfc",
    "expected_exceeding",
    "fit_linear",
    "fit_power_law",
    "h_asymptotic",
    "h_curve",
    "indicator_value",
    "mean_citations",
    "metrics_analytic",
    "metrics_simulated",
    "number_density",
    "pdf",
    "pearson",
    "power_transform",
    "run_replicates",
    "sample_series",
    "scatter_dataset",
    "solve_h",
    "study_specs",
    "survival_probability",
    "total_citations",
]

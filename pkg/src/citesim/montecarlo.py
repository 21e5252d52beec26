"""Synthetic citation series and replicate-averaged empirical indicators.

Draws are exp(mu + sigma * z) with z standard normal, truncated to whole
citation counts and ranked from most to least cited. Truncation (rather
than rounding to nearest) keeps threshold counting exact: a truncated
count reaches an integer threshold x exactly when the underlying draw
does, so empirical exceedance fractions are unbiased estimates of the
model's survival probabilities. The price is a mean shifted down by the
mean fractional part of the draws, about half a citation.

Every replicate owns a private generator seeded from (master seed,
replicate index) through a SplitMix64-style avalanche, and aggregation
runs over stored per-replicate values, so results depend only on the
master seed, never on evaluation order or parallelism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lognormal import DEFAULT_THRESHOLDS, SeriesSpec, ThresholdSet

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

#: Master seed used when none is given; echoed in CLI output metadata.
DEFAULT_SEED = 20200212


def derive_seed(master: int, index: int) -> int:
    """Deterministic 64-bit sub-seed for stream `index` under `master`.

    SplitMix64: jump the Weyl sequence to position index + 1, then
    avalanche. Nearby (master, index) pairs land on unrelated seeds.
    """
    if index < 0:
        raise ValueError(f"stream index must be nonnegative, got {index}")
    z = (master + (index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def discretize(value: float) -> int:
    """Whole-citation count for one positive continuous draw: truncation.

    Draws below 1 become zero-citation papers and stay in the sample.
    """
    if not value > 0.0:
        raise ValueError(f"draw must be positive, got {value!r}")
    return int(math.floor(value))


@dataclass(frozen=True, eq=False)
class CitationSample:
    """One synthetic series: nonnegative integer counts, sorted descending.

    The constructor accepts counts in any order and normalizes them; the
    stored array is read-only.
    """

    counts: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.counts)
        if arr.ndim != 1:
            raise ValueError("counts must be one-dimensional")
        if arr.size and not np.issubdtype(arr.dtype, np.integer):
            if not np.all(np.equal(np.mod(arr, 1), 0)):
                raise ValueError("counts must be whole numbers")
        arr = arr.astype(np.int64, copy=True)
        if arr.size and arr.min() < 0:
            raise ValueError("counts must be nonnegative")
        arr[::-1].sort()
        arr.flags.writeable = False
        object.__setattr__(self, "counts", arr)

    def __len__(self) -> int:
        return int(self.counts.size)


def sample_series(spec: SeriesSpec, seed: int) -> CitationSample:
    """One synthetic series for `spec`: deterministic for a fixed seed."""
    return CitationSample(_draw_sorted_counts(spec, seed))


def _draw_sorted_counts(spec: SeriesSpec, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed & _MASK64)
    z = rng.standard_normal(spec.n_papers)
    counts = np.floor(np.exp(spec.params.mu + spec.params.sigma * z)).astype(np.int64)
    counts[::-1].sort()
    return counts


def empirical_h(sample: CitationSample) -> int:
    """Largest h such that at least h papers have h or more citations."""
    return _h_of_sorted(sample.counts)


def _h_of_sorted(counts: np.ndarray) -> int:
    if counts.size == 0:
        return 0
    # counts[i] - (i+1) is strictly decreasing, so the predicate holds on
    # a prefix and the h-index equals the number of ranks it holds for.
    return int(np.count_nonzero(counts >= np.arange(1, counts.size + 1)))


def empirical_counts(sample: CitationSample, thresholds: ThresholdSet) -> dict[float, int]:
    """Papers with at least x citations, for each threshold x."""
    counts = sample.counts
    return {x: int(np.count_nonzero(counts >= x)) for x in thresholds}


@dataclass(frozen=True)
class ReplicateSummary:
    """Replicate-averaged empirical indicators for one series spec."""

    spec: SeriesSpec
    replicates: int
    h_mean: float
    h_stddev: float
    sum_citations_mean: float
    counts_above: dict[float, float]
    seed: int


def run_replicates(
    spec: SeriesSpec,
    replicates: int,
    thresholds: ThresholdSet = DEFAULT_THRESHOLDS,
    seed: int = DEFAULT_SEED,
) -> ReplicateSummary:
    """Generate `replicates` independent series and average their metrics.

    Replicate i draws from its own generator seeded with
    derive_seed(seed, i); per-replicate h, citation totals, and threshold
    counts are stored first and averaged afterwards, so the summary is
    identical however the replicates are scheduled.
    """
    if replicates < 1:
        raise ValueError(f"need at least 1 replicate, got {replicates}")
    n = spec.n_papers
    ranks = np.arange(1, n + 1)
    xs = list(thresholds)
    h_values = np.empty(replicates, dtype=np.int64)
    totals = np.empty(replicates, dtype=np.int64)
    above = np.empty((replicates, len(xs)), dtype=np.int64)
    for i in range(replicates):
        counts = _draw_sorted_counts(spec, derive_seed(seed, i))
        h_values[i] = np.count_nonzero(counts >= ranks)
        totals[i] = counts.sum()
        for j, x in enumerate(xs):
            above[i, j] = np.count_nonzero(counts >= x)
    means = above.mean(axis=0)
    return ReplicateSummary(
        spec=spec,
        replicates=replicates,
        h_mean=float(h_values.mean()),
        h_stddev=float(h_values.std(ddof=1)) if replicates > 1 else 0.0,
        sum_citations_mean=float(totals.mean()),
        counts_above={x: float(m) for x, m in zip(xs, means)},
        seed=seed,
    )


def averaged_rank_frequency(spec: SeriesSpec, replicates: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Mean citation count at each rank across replicates.

    Entry k is the average k-th largest count, the smoothed version of a
    single series' rank/frequency curve; uses the same replicate seeding
    as :func:`run_replicates`.
    """
    if replicates < 1:
        raise ValueError(f"need at least 1 replicate, got {replicates}")
    acc = np.zeros(spec.n_papers, dtype=np.float64)
    for i in range(replicates):
        acc += _draw_sorted_counts(spec, derive_seed(seed, i))
    return acc / replicates

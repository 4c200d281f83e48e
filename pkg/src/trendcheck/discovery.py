"""Alternative-statement discovery over the sorted pair differences.

Both discovery tasks reduce to order statistics on the multiset of
``y_e - y_b`` over the pair space: the most supported statement of a fixed
width is a maximum-coverage window slide, and the tightest statement at a
support threshold is a minimum-range scan over k consecutive sorted values.
Pair spaces too large to materialize fall back to a uniform sample of
differences; results then carry a ``sampled`` flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyPairSpace, InvalidThreshold, InvalidWidth
from .ingest import PointSeries
from .model import DiscoveredStatement, SamplingConfig
from .support import _sample_pair_indices, _window_runs, pair_space_size

#: Above this many pairs (~80 MB of float64 differences) discovery samples.
DEFAULT_MAX_EXACT_PAIRS = 10_000_000


@dataclass(frozen=True)
class DifferenceList:
    """Sorted ascending ``y_e - y_b`` values, exhaustive or sampled."""

    diffs: np.ndarray
    sampled: bool = False
    sample_budget: int | None = None

    def __post_init__(self) -> None:
        if len(self.diffs) == 0:
            raise EmptyPairSpace("difference list is empty")
        if np.any(np.diff(self.diffs) < 0):
            raise ValueError("differences must be sorted ascending")

    def __len__(self) -> int:
        return len(self.diffs)


def build_differences(
    begin: PointSeries,
    end: PointSeries,
    window: float | None = None,
    max_exact_pairs: int = DEFAULT_MAX_EXACT_PAIRS,
    sampling: SamplingConfig = SamplingConfig(),
) -> DifferenceList:
    """Materialize and sort every pair difference, or a uniform sample.

    The exhaustive path runs whenever the pair space holds at most
    ``max_exact_pairs`` pairs.  Beyond that, ``max(sampling.budgets)``
    pairs are drawn uniformly with replacement (deterministic for a fixed
    seed) and sorted instead.
    """
    total = pair_space_size(begin, end, window)
    if total == 0:
        raise EmptyPairSpace("no (begin, end) pairs exist under the given constraint")

    if total <= max_exact_pairs:
        if window is None:
            diffs = (end.ys[np.newaxis, :] - begin.ys[:, np.newaxis]).ravel()
        else:
            bi, ei = _all_window_pairs(begin, end, window)
            diffs = end.ys[ei] - begin.ys[bi]
        diffs.sort()
        return DifferenceList(diffs=diffs, sampled=False, sample_budget=None)

    budget = max(sampling.budgets)
    rng = np.random.default_rng(sampling.seed)
    bi, ei = _sample_pair_indices(rng, begin, end, window, budget)
    diffs = end.ys[ei] - begin.ys[bi]
    diffs.sort()
    return DifferenceList(diffs=diffs, sampled=True, sample_budget=budget)


def _all_window_pairs(
    begin: PointSeries, end: PointSeries, window: float
) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays of every pair with x_e == x_b + window."""
    left, right = _window_runs(begin, end, window)
    counts = right - left
    total = int(counts.sum())
    bi = np.repeat(np.arange(len(begin)), counts)
    starts = np.cumsum(counts) - counts
    ei = np.repeat(left, counts) + (np.arange(total) - np.repeat(starts, counts))
    return bi, ei


def most_supported(diffs: DifferenceList, width: float) -> DiscoveredStatement:
    """Bounds of the given width covering the most differences.

    Candidate lower bounds are the difference values themselves; any optimal
    interval can be shifted right until its lower bound coincides with the
    smallest difference it contains, so anchoring loses nothing.  Ties go to
    the smallest lower bound.  Linear after sorting.
    """
    if not (math.isfinite(width) and width > 0):
        raise InvalidWidth(f"width must be a positive finite number, got {width}")
    values = diffs.diffs
    m = len(values)
    upper = np.searchsorted(values, values + width, side="right")
    counts = upper - np.arange(m)
    i = int(np.argmax(counts))  # first maximum: smallest anchoring lo wins ties
    lo = float(values[i])
    hi = lo + width
    return DiscoveredStatement.from_bounds(lo, hi, int(counts[i]) / m)


def tightest(diffs: DifferenceList, min_support: float) -> DiscoveredStatement:
    """Narrowest bounds whose support meets the threshold.

    With m differences and k = ceil(min_support * m), the answer is the
    minimum-range window of k consecutive sorted values.  Ties go to the
    smallest lower bound.  Reported support counts every difference inside
    the returned bounds, so duplicates can push it above k/m.
    """
    if math.isnan(min_support) or not 0 < min_support <= 1:
        raise InvalidThreshold(f"support threshold must lie in (0, 1], got {min_support}")
    values = diffs.diffs
    m = len(values)
    k = min(m, max(1, math.ceil(min_support * m)))
    widths = values[k - 1 :] - values[: m - k + 1]
    i = int(np.argmin(widths))  # first minimum: smallest lo wins ties
    lo = float(values[i])
    hi = float(values[i + k - 1])
    inside = int(
        np.searchsorted(values, hi, side="right") - np.searchsorted(values, lo, side="left")
    )
    return DiscoveredStatement.from_bounds(lo, hi, inside / m)

"""Support scoring for trendline statements.

Three interchangeable evaluators over the same pair space:

* :func:`support_baseline` enumerates every (begin, end) pair — the slow,
  obviously-correct reference.
* :func:`support_exact` returns identical counts using binary search over
  the sorted end-region targets, O((n_b + n_e) log n_e).
* :func:`support_random` estimates the same proportion from uniformly
  sampled pairs, one estimate per budget, with Hoeffding radii.

The pair space is the Cartesian product of the two region point-sets, or,
when a window length ``w`` is given, the subset of pairs whose trend
values satisfy ``x_e - x_b == w`` exactly (epoch seconds are integral, so
date windows are exact; numeric trends compare with zero tolerance).
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyPairSpace
from .ingest import PointSeries
from .model import SamplingConfig, StatementBounds, SupportEstimate, SupportResult

# Cap on the transient difference-matrix size used by the brute-force path.
_BLOCK_ELEMENTS = 1 << 22


def _window_runs(begin: PointSeries, end: PointSeries, window: float) -> tuple[np.ndarray, np.ndarray]:
    """Per begin point, the [left, right) run of end points with x_e == x_b + w.

    Relies on PointSeries being sorted by x; both run boundaries come from
    binary search, so duplicates on the trend axis are handled.
    """
    targets = begin.xs + window
    left = np.searchsorted(end.xs, targets, side="left")
    right = np.searchsorted(end.xs, targets, side="right")
    return left, right


def pair_space_size(begin: PointSeries, end: PointSeries, window: float | None = None) -> int:
    """Number of admissible (begin, end) pairs; 0 when the space is empty."""
    if window is None:
        return len(begin) * len(end)
    left, right = _window_runs(begin, end, window)
    return int((right - left).sum())


def _require_pairs(total: int) -> None:
    if total == 0:
        raise EmptyPairSpace("no (begin, end) pairs exist under the given constraint")


def _sample_pair_indices(
    rng: np.random.Generator,
    begin: PointSeries,
    end: PointSeries,
    window: float | None,
    size: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Uniform-with-replacement draw of pair indices from the pair space.

    Constrained draws index the virtual list of constraint-satisfying pairs
    (begin order, then end order within a run) without materializing it.
    """
    if window is None:
        _require_pairs(len(begin) * len(end))
        bi = rng.integers(0, len(begin), size=size)
        ei = rng.integers(0, len(end), size=size)
        return bi, ei
    left, right = _window_runs(begin, end, window)
    counts = right - left
    cum = np.cumsum(counts)
    total = int(cum[-1]) if len(cum) else 0
    _require_pairs(total)
    k = rng.integers(0, total, size=size)
    bi = np.searchsorted(cum, k, side="right")
    ei = left[bi] + (k - (cum[bi] - counts[bi]))
    return bi, ei


def support_baseline(
    begin: PointSeries,
    end: PointSeries,
    bounds: StatementBounds,
    window: float | None = None,
) -> SupportResult:
    """Brute-force support: test ``y_e - y_b`` against the bounds for every pair.

    Enumerates the full Cartesian product (in blocks, to bound memory); with
    a window, every pair is checked for ``x_e == x_b + w`` before the bounds
    test.  Quadratic — intended as the verification reference, not for large
    regions.
    """
    supporting = 0
    if window is None:
        total = len(begin) * len(end)
        _require_pairs(total)
        step = max(1, _BLOCK_ELEMENTS // max(1, len(end)))
        for lo_i in range(0, len(begin), step):
            block = begin.ys[lo_i : lo_i + step]
            d = end.ys[np.newaxis, :] - block[:, np.newaxis]
            supporting += int(np.count_nonzero((d >= bounds.lo) & (d <= bounds.hi)))
        return SupportResult.from_counts(supporting, total)

    total = 0
    for xb, yb in zip(begin.xs, begin.ys):
        matches = end.xs == xb + window
        n = int(np.count_nonzero(matches))
        if n == 0:
            continue
        total += n
        d = end.ys[matches] - yb
        supporting += int(np.count_nonzero((d >= bounds.lo) & (d <= bounds.hi)))
    _require_pairs(total)
    return SupportResult.from_counts(supporting, total)


def support_exact(
    begin: PointSeries,
    end: PointSeries,
    bounds: StatementBounds,
    window: float | None = None,
) -> SupportResult:
    """Support via binary search; same counts as the baseline.

    Unconstrained: sort the end-region targets once, then for each begin
    point count the end targets inside ``[y_b + lo, y_b + hi]`` with two
    searches.  Constrained: locate the x-run matched by ``x_b + w`` per
    begin point and test its targets against the shifted bounds.
    """
    if window is None:
        total = len(begin) * len(end)
        _require_pairs(total)
        end_sorted = np.sort(end.ys)
        lo_idx = np.searchsorted(end_sorted, begin.ys + bounds.lo, side="left")
        hi_idx = np.searchsorted(end_sorted, begin.ys + bounds.hi, side="right")
        supporting = int((hi_idx - lo_idx).sum())
        return SupportResult.from_counts(supporting, total)

    left, right = _window_runs(begin, end, window)
    total = int((right - left).sum())
    _require_pairs(total)
    supporting = 0
    for yb, l, r in zip(begin.ys, left, right):
        if l == r:
            continue
        seg = end.ys[l:r]
        supporting += int(np.count_nonzero((seg >= yb + bounds.lo) & (seg <= yb + bounds.hi)))
    return SupportResult.from_counts(supporting, total)


def support_random(
    begin: PointSeries,
    end: PointSeries,
    bounds: StatementBounds,
    window: float | None = None,
    config: SamplingConfig = SamplingConfig(),
) -> list[SupportEstimate]:
    """Sampled support estimates, one per budget, in budget order.

    Each budget gets its own generator seeded from (config.seed, budget
    index), so results are reproducible and adding a budget never perturbs
    the others.  Pairs are drawn uniformly with replacement from the pair
    space; the estimate is the supporting fraction of the draw.
    """
    _require_pairs(pair_space_size(begin, end, window))
    estimates = []
    for i, budget in enumerate(config.budgets):
        rng = np.random.default_rng([config.seed, i])
        bi, ei = _sample_pair_indices(rng, begin, end, window, budget)
        d = end.ys[ei] - begin.ys[bi]
        hits = int(np.count_nonzero((d >= bounds.lo) & (d <= bounds.hi)))
        estimates.append(SupportEstimate(budget=budget, estimate=hits / budget))
    return estimates

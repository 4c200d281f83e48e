"""Domain types for trendline statements.

A statement claims that the change of a target value between a beginning
point and an end point falls inside a numeric interval.  Statements are
judged against *all* candidate (begin, end) point pairs drawn from a pair
of disjoint regions on the trend axis, optionally restricted to pairs an
exact window length apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidRegion, InvalidWindow, OverlappingRegions

# Trend values are plain floats: raw numbers for numeric trend columns,
# UTC epoch seconds for date columns.
TrendValue = float

#: Budgets used by the sampling estimator when the caller does not choose any.
DEFAULT_BUDGETS: tuple[int, ...] = (1_000, 5_000, 10_000, 50_000, 100_000)


def hoeffding_radius(budget: int, delta: float = 0.05) -> float:
    """Two-sided Hoeffding confidence radius sqrt(ln(2/delta) / (2*budget))."""
    return math.sqrt(math.log(2.0 / delta) / (2.0 * budget))


@dataclass(frozen=True)
class Point:
    """One observation: position on the trend axis and its target value."""

    x: TrendValue
    y: float


@dataclass(frozen=True)
class StatementBounds:
    """Closed interval [lo, hi] the end-minus-begin difference must fall in.

    Omitted endpoints are infinite: ``StatementBounds(hi=0.0)`` means
    "the target did not increase".  Both endpoints infinite is legal and
    makes every pair a supporting pair.
    """

    lo: float = -math.inf
    hi: float = math.inf

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("statement bounds cannot be NaN")
        if self.lo == math.inf or self.hi == -math.inf:
            raise ValueError("lo may be -inf or finite, hi may be finite or +inf")
        if self.lo > self.hi:
            raise ValueError(f"lower bound {self.lo} exceeds upper bound {self.hi}")

    def contains(self, d: float) -> bool:
        """Whether difference ``d`` satisfies the statement (closed on both ends)."""
        return self.lo <= d <= self.hi

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.lo) and math.isinf(self.hi)


@dataclass(frozen=True)
class Region:
    """Closed interval [lo, hi] on the trend axis; membership includes both ends."""

    lo: TrendValue
    hi: TrendValue

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidRegion(f"region endpoints must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise InvalidRegion(f"region start {self.lo} exceeds region end {self.hi}")

    def contains(self, x: TrendValue) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Region") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class RegionPair:
    """Disjoint begin/end regions plus an optional exact window length.

    Construction validates everything: regions must not intersect (closed
    intervals sharing an endpoint count as intersecting) and the window,
    when given, must be a positive finite number.  No ordering between the
    begin and end region is required.
    """

    begin: Region
    end: Region
    window: float | None = None

    def __post_init__(self) -> None:
        if self.begin.overlaps(self.end):
            raise OverlappingRegions(
                f"begin region [{self.begin.lo}, {self.begin.hi}] intersects "
                f"end region [{self.end.lo}, {self.end.hi}]"
            )
        if self.window is not None:
            if not math.isfinite(self.window) or self.window <= 0:
                raise InvalidWindow(f"window must be > 0, got {self.window}")


@dataclass(frozen=True)
class Statement:
    """A trendline statement: which columns, the bounds, and the pair space."""

    target_column: str
    trend_column: str
    trend_is_date: bool
    bounds: StatementBounds
    regions: RegionPair

    def __post_init__(self) -> None:
        if self.target_column == self.trend_column:
            raise ValueError("target and trend attributes must differ")


@dataclass(frozen=True)
class SupportResult:
    """Exact support: supporting pairs over total pairs in the pair space."""

    supporting_pairs: int
    total_pairs: int
    support: float

    def __post_init__(self) -> None:
        if self.total_pairs <= 0:
            raise ValueError("total_pairs must be positive")
        if not 0 <= self.supporting_pairs <= self.total_pairs:
            raise ValueError("supporting_pairs must lie in [0, total_pairs]")
        if self.support != self.supporting_pairs / self.total_pairs:
            raise ValueError("support must equal supporting_pairs / total_pairs")

    @classmethod
    def from_counts(cls, supporting_pairs: int, total_pairs: int) -> "SupportResult":
        return cls(supporting_pairs, total_pairs, supporting_pairs / total_pairs)


@dataclass(frozen=True)
class SamplingConfig:
    """Budgets (pairs to draw per estimate) and the seed for the generator."""

    budgets: tuple[int, ...] = DEFAULT_BUDGETS
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "budgets", tuple(int(b) for b in self.budgets))
        if not self.budgets:
            raise ValueError("at least one budget is required")
        if any(b < 1 for b in self.budgets):
            raise ValueError("budgets must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")


@dataclass(frozen=True)
class SupportEstimate:
    """Sampled support estimate for one budget with its 95% Hoeffding radius."""

    budget: int
    estimate: float
    epsilon95: float = field(default=0.0)

    def __post_init__(self) -> None:
        if self.epsilon95 == 0.0:
            object.__setattr__(self, "epsilon95", hoeffding_radius(self.budget))


@dataclass(frozen=True)
class DiscoveredStatement:
    """Bounds found by discovery plus the support and width they achieve."""

    lo: float
    hi: float
    support: float
    width: float

    def __post_init__(self) -> None:
        if self.width != self.hi - self.lo:
            raise ValueError("width must equal hi - lo")

    @classmethod
    def from_bounds(cls, lo: float, hi: float, support: float) -> "DiscoveredStatement":
        return cls(lo, hi, support, hi - lo)

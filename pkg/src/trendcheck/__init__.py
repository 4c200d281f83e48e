"""trendcheck: detect cherry-picked trendline statements.

Given a time series and a statement of the form "the target changed by an
amount inside [lo, hi] between a begin region and an end region", compute
the statement's support (the fraction of candidate point pairs that agree),
and discover better alternatives: the most supported bounds of a given
width, and the tightest bounds at a support threshold.
"""

from .discovery import (
    DEFAULT_MAX_EXACT_PAIRS,
    DifferenceList,
    build_differences,
    most_supported,
    tightest,
)
from .errors import (
    EmptyPairSpace,
    EmptyRegion,
    InvalidRegion,
    InvalidThreshold,
    InvalidWidth,
    InvalidWindow,
    MalformedCsv,
    OverlappingRegions,
    RowLimitTooLarge,
    TrendcheckError,
    UnknownColumn,
    UnknownDataset,
    UnparseableValue,
)
from .ingest import (
    ColumnInfo,
    Dataset,
    DatasetSchema,
    LoadOptions,
    PointSeries,
    parse_trend_value,
    slice_region,
)
from .model import (
    DEFAULT_BUDGETS,
    DiscoveredStatement,
    Point,
    Region,
    RegionPair,
    SamplingConfig,
    Statement,
    StatementBounds,
    SupportEstimate,
    SupportResult,
    hoeffding_radius,
)
from .support import (
    pair_space_size,
    support_baseline,
    support_exact,
    support_random,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGETS",
    "DEFAULT_MAX_EXACT_PAIRS",
    "ColumnInfo",
    "Dataset",
    "DatasetSchema",
    "DifferenceList",
    "DiscoveredStatement",
    "EmptyPairSpace",
    "EmptyRegion",
    "InvalidRegion",
    "InvalidThreshold",
    "InvalidWidth",
    "InvalidWindow",
    "LoadOptions",
    "MalformedCsv",
    "OverlappingRegions",
    "Point",
    "PointSeries",
    "Region",
    "RegionPair",
    "RowLimitTooLarge",
    "SamplingConfig",
    "Statement",
    "StatementBounds",
    "SupportEstimate",
    "SupportResult",
    "TrendcheckError",
    "UnknownColumn",
    "UnknownDataset",
    "UnparseableValue",
    "build_differences",
    "hoeffding_radius",
    "most_supported",
    "pair_space_size",
    "parse_trend_value",
    "slice_region",
    "support_baseline",
    "support_exact",
    "support_random",
    "tightest",
]

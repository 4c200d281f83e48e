"""Exception hierarchy shared across the package."""


class TrendcheckError(Exception):
    """Base class for all trendcheck domain errors."""


class InvalidRegion(TrendcheckError):
    """Region endpoints out of order or not finite."""


class OverlappingRegions(TrendcheckError):
    """Begin and end regions intersect (closed-interval semantics)."""


class InvalidWindow(TrendcheckError):
    """Window constraint is not a positive finite number."""


class MalformedCsv(TrendcheckError):
    """CSV is ragged, lacks a header, or has duplicate/empty column names."""


class RowLimitTooLarge(TrendcheckError):
    """Requested row limit exceeds the number of rows in the file."""


class UnparseableValue(TrendcheckError):
    """A cell could not be parsed as the requested kind."""


class UnknownColumn(TrendcheckError):
    """Referenced column does not exist in the dataset."""


class UnknownDataset(TrendcheckError):
    """Referenced dataset id is not in the registry."""


class EmptyRegion(TrendcheckError):
    """A support region contains no usable points."""


class EmptyPairSpace(TrendcheckError):
    """No (begin, end) pairs exist under the given constraint."""


class InvalidWidth(TrendcheckError):
    """Statement-range width must be > 0."""


class InvalidThreshold(TrendcheckError):
    """Support threshold must lie in (0, 1]."""

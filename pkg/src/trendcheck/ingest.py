"""CSV ingestion: load datasets, infer column kinds, slice region point-sets.

Datasets are plain UTF-8 CSV files with a header row.  Cells stay raw
strings until a slice asks for them; the trend column is parsed according
to the statement (dates or numbers), the target column as numbers.  Rows
whose target is missing or unparseable are dropped and counted.
"""

from __future__ import annotations

import calendar
import csv
import math
import re
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from .errors import (
    EmptyRegion,
    MalformedCsv,
    RowLimitTooLarge,
    UnknownColumn,
    UnparseableValue,
)
from .model import Point, Region, Statement, TrendValue

DATE_FORMATS = ("%Y-%m-%d %H:%M:%S", "%Y-%m-%d")
# strptime tolerates unpadded fields; the shape check keeps the two layouts strict
_DATE_SHAPE = re.compile(r"\d{4}-\d{2}-\d{2}( \d{2}:\d{2}:\d{2})?$")

ColumnKind = Literal["numeric", "date", "text"]


@dataclass(frozen=True)
class ColumnInfo:
    name: str
    kind: ColumnKind


@dataclass(frozen=True)
class DatasetSchema:
    columns: tuple[ColumnInfo, ...]
    row_count: int

    def kind_of(self, name: str) -> ColumnKind:
        for col in self.columns:
            if col.name == name:
                return col.kind
        raise UnknownColumn(f"no column named {name!r}")


@dataclass(frozen=True)
class LoadOptions:
    """row_limit keeps only the first n rows; must not exceed the file."""

    row_limit: int | None = None

    def __post_init__(self) -> None:
        if self.row_limit is not None and self.row_limit < 1:
            raise ValueError("row_limit must be a positive integer")


@dataclass(frozen=True)
class PointSeries:
    """Points of one region, sorted ascending by x, with finite targets.

    ``dropped_rows`` counts rows that fell inside the region (or had no
    usable trend value) but were discarded for a missing/unparseable target.
    """

    xs: np.ndarray
    ys: np.ndarray
    source: str = ""
    dropped_rows: int = 0

    def __post_init__(self) -> None:
        if len(self.xs) != len(self.ys):
            raise ValueError("xs and ys must have equal length")
        if len(self.xs) > 1 and np.any(np.diff(self.xs) < 0):
            raise ValueError("points must be sorted ascending by x")
        if len(self.ys) and not np.all(np.isfinite(self.ys)):
            raise ValueError("target values must be finite")

    def __len__(self) -> int:
        return len(self.xs)

    def points(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in zip(self.xs, self.ys)]


def parse_date_value(raw: str) -> float | None:
    """Epoch seconds (UTC) for 'YYYY-MM-DD HH:MM:SS' or 'YYYY-MM-DD', else None."""
    raw = raw.strip()
    if not _DATE_SHAPE.fullmatch(raw):
        return None
    for fmt in DATE_FORMATS:
        try:
            return float(calendar.timegm(time.strptime(raw, fmt)))
        except ValueError:
            continue
    return None


def parse_numeric_value(raw: str) -> float | None:
    """Finite float for a numeric literal, else None (rejects nan/inf)."""
    try:
        value = float(raw)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def parse_trend_value(raw: str, is_date: bool, *, row: int | None = None) -> TrendValue:
    """Parse one trend-axis value; dates become UTC epoch seconds.

    Only the two supported date layouts are accepted; anything else raises
    rather than guessing, because a misread date silently corrupts region
    membership.
    """
    where = "" if row is None else f" (row {row})"
    if not raw.strip():
        raise UnparseableValue(f"empty trend value{where}")
    if is_date:
        parsed = parse_date_value(raw)
        if parsed is None:
            raise UnparseableValue(f"cannot parse {raw!r} as a date{where}")
        return parsed
    parsed = parse_numeric_value(raw)
    if parsed is None:
        raise UnparseableValue(f"cannot parse {raw!r} as a number{where}")
    return parsed


def _infer_kind(values: list[str]) -> ColumnKind:
    """date if every non-empty cell parses as a date, else numeric, else text.

    Short-circuits on the first counterexample; equivalent to scanning all
    values because one failure already decides the kind.  Columns with no
    non-empty cells are text.
    """
    non_empty = [v for v in values if v.strip()]
    if not non_empty:
        return "text"
    if all(parse_date_value(v) is not None for v in non_empty):
        return "date"
    if all(parse_numeric_value(v) is not None for v in non_empty):
        return "numeric"
    return "text"


class Dataset:
    """Parsed CSV held as raw string cells plus an inferred schema.

    Immutable after load; slicing is read-only and safe to run concurrently.
    """

    def __init__(
        self,
        dataset_id: str,
        header: list[str],
        rows: list[list[str]],
        name: str | None = None,
    ):
        if not header:
            raise MalformedCsv("missing header row")
        if any(not col.strip() for col in header):
            raise MalformedCsv("empty column name in header")
        if len(set(header)) != len(header):
            raise MalformedCsv("duplicate column names in header")
        for i, row in enumerate(rows):
            if len(row) != len(header):
                raise MalformedCsv(
                    f"row {i + 2} has {len(row)} fields, header has {len(header)}"
                )
        self.id = dataset_id
        self.name = name or f"{dataset_id}.csv"
        self.header = list(header)
        self.rows = rows
        self.schema = DatasetSchema(
            columns=tuple(
                ColumnInfo(name, _infer_kind([row[i] for row in rows]))
                for i, name in enumerate(header)
            ),
            row_count=len(rows),
        )

    @classmethod
    def load(cls, path: str | Path, options: LoadOptions | None = None) -> "Dataset":
        """Read a CSV file, apply the row limit, and infer the schema."""
        options = options or LoadOptions()
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"no such dataset file: {path}")
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise MalformedCsv(f"{path.name}: file is empty") from None
            rows = list(reader)
        if options.row_limit is not None:
            if options.row_limit > len(rows):
                raise RowLimitTooLarge(
                    f"row limit {options.row_limit} exceeds row count {len(rows)}"
                )
            rows = rows[: options.row_limit]
        return cls(path.stem, header, rows, name=path.name)

    def head(self, n: int) -> "Dataset":
        """First n rows as a new dataset (schema re-inferred on the subset)."""
        if n < 1:
            raise ValueError("row limit must be positive")
        if n > len(self.rows):
            raise RowLimitTooLarge(f"row limit {n} exceeds row count {len(self.rows)}")
        if n == len(self.rows):
            return self
        return Dataset(self.id, self.header, self.rows[:n], name=self.name)

    def column_index(self, name: str) -> int:
        try:
            return self.header.index(name)
        except ValueError:
            raise UnknownColumn(f"no column named {name!r} in dataset {self.id!r}") from None


def slice_region(
    dataset: Dataset, statement: Statement, which: Literal["begin", "end"]
) -> PointSeries:
    """Collect the points of one support region, sorted by trend value.

    Rows with an empty trend cell, or an in-region missing/unparseable
    target, are dropped and counted.  A non-empty trend cell that does not
    parse under the statement's date/numeric setting is an error.
    """
    region: Region = getattr(statement.regions, which)
    ti = dataset.column_index(statement.trend_column)
    yi = dataset.column_index(statement.target_column)

    xs: list[float] = []
    ys: list[float] = []
    dropped = 0
    for i, row in enumerate(dataset.rows):
        raw_x = row[ti]
        if not raw_x.strip():
            dropped += 1
            continue
        x = parse_trend_value(raw_x, statement.trend_is_date, row=i + 2)
        if not region.contains(x):
            continue
        y = parse_numeric_value(row[yi])
        if y is None:
            dropped += 1
            continue
        xs.append(x)
        ys.append(y)

    if not xs:
        raise EmptyRegion(
            f"{which} region [{region.lo}, {region.hi}] of "
            f"{statement.trend_column!r} contains no usable points"
        )
    order = np.argsort(np.asarray(xs), kind="stable")
    return PointSeries(
        xs=np.asarray(xs, dtype=np.float64)[order],
        ys=np.asarray(ys, dtype=np.float64)[order],
        source=f"{dataset.id}:{statement.trend_column}/{statement.target_column}",
        dropped_rows=dropped,
    )

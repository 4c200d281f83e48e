"""Request/response wire models and the evaluation pipeline behind them.

One code path serves both the HTTP service and the CLI: validate the
request, slice the two regions, run the engines the task asks for, and
assemble a response that echoes the effective inputs (conditions the task
did not need come back null).  Replaying a response's echo with its seed
reproduces every number in it.
"""

from __future__ import annotations

import math
import secrets
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .discovery import DEFAULT_MAX_EXACT_PAIRS, build_differences, most_supported, tightest
from .errors import EmptyPairSpace
from .ingest import Dataset, parse_trend_value, slice_region
from .model import (
    DEFAULT_BUDGETS,
    Region,
    RegionPair,
    SamplingConfig,
    Statement,
    StatementBounds,
)
from .support import pair_space_size, support_baseline, support_exact, support_random

Task = Literal["support", "mss", "tightest", "all"]


class RegionSpec(BaseModel):
    """One region as raw trend-value strings, parsed server-side."""

    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(alias="from")
    to: str


class RegionsSpec(BaseModel):
    begin: RegionSpec
    end: RegionSpec


class BoundsSpec(BaseModel):
    """null endpoints mean -inf / +inf."""

    lower: Optional[float] = None
    upper: Optional[float] = None

    @model_validator(mode="after")
    def _check(self) -> "BoundsSpec":
        for name, v in (("lower", self.lower), ("upper", self.upper)):
            if v is not None and not math.isfinite(v):
                raise ValueError(f"{name} bound must be finite or null")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        return self


class SamplingSpec(BaseModel):
    budgets: Optional[list[int]] = None
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _check(self) -> "SamplingSpec":
        if self.budgets is not None:
            if not self.budgets:
                raise ValueError("budgets must be a non-empty list")
            if any(b < 1 for b in self.budgets):
                raise ValueError("budgets must be >= 1")
        if self.seed is not None and self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        return self


class EvaluationRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    dataset_id: str
    task: Task
    target_column: str
    trend_column: str
    trend_is_date: bool = False
    bounds: BoundsSpec = BoundsSpec()
    regions: RegionsSpec
    window: Optional[float] = None
    row_limit: Optional[int] = None
    sampling: SamplingSpec = SamplingSpec()
    mss_width: Optional[float] = None
    tightest_support: Optional[float] = None

    @model_validator(mode="after")
    def _check(self) -> "EvaluationRequest":
        if self.target_column == self.trend_column:
            raise ValueError("target_column and trend_column must differ")
        if self.window is not None and not (math.isfinite(self.window) and self.window > 0):
            raise ValueError("window must be a positive finite number")
        if self.row_limit is not None and self.row_limit < 1:
            raise ValueError("row_limit must be a positive integer")
        if self.task in ("mss", "all"):
            if self.mss_width is None or not (
                math.isfinite(self.mss_width) and self.mss_width > 0
            ):
                raise ValueError("task requires mss_width > 0")
        if self.task in ("tightest", "all"):
            if (
                self.tightest_support is None
                or math.isnan(self.tightest_support)
                or not 0 < self.tightest_support <= 1
            ):
                raise ValueError("task requires tightest_support in (0, 1]")
        return self


class SupportResultModel(BaseModel):
    support: float
    supporting_pairs: int
    total_pairs: int


class SupportEstimateModel(BaseModel):
    budget: int
    estimate: float
    epsilon95: float


class SupportSection(BaseModel):
    exact_baseline: Optional[SupportResultModel] = None
    exact: SupportResultModel
    random: list[SupportEstimateModel]


class DiscoveredModel(BaseModel):
    lo: float
    hi: float
    support: float
    width: float


class EvaluationEcho(BaseModel):
    """The request as the evaluation effectively ran it; unused fields null."""

    model_config = ConfigDict(populate_by_name=True)

    dataset_id: str
    task: Task
    target_column: str
    trend_column: str
    trend_is_date: bool
    bounds: Optional[BoundsSpec] = None
    regions: RegionsSpec
    window: Optional[float] = None
    row_limit: Optional[int] = None
    sampling: Optional[SamplingSpec] = None
    mss_width: Optional[float] = None
    tightest_support: Optional[float] = None


class EvaluationResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    support: Optional[SupportSection] = None
    mss: Optional[DiscoveredModel] = None
    tightest: Optional[DiscoveredModel] = None
    echo: EvaluationEcho
    warnings: list[str] = []


def _statement_from_request(request: EvaluationRequest) -> Statement:
    bounds = StatementBounds(
        lo=-math.inf if request.bounds.lower is None else request.bounds.lower,
        hi=math.inf if request.bounds.upper is None else request.bounds.upper,
    )
    is_date = request.trend_is_date
    begin = Region(
        parse_trend_value(request.regions.begin.from_, is_date),
        parse_trend_value(request.regions.begin.to, is_date),
    )
    end = Region(
        parse_trend_value(request.regions.end.from_, is_date),
        parse_trend_value(request.regions.end.to, is_date),
    )
    return Statement(
        target_column=request.target_column,
        trend_column=request.trend_column,
        trend_is_date=is_date,
        bounds=bounds,
        regions=RegionPair(begin=begin, end=end, window=request.window),
    )


def run_evaluation(
    dataset: Dataset,
    request: EvaluationRequest,
    max_exact_pairs: int = DEFAULT_MAX_EXACT_PAIRS,
) -> EvaluationResponse:
    """Slice the regions, run the engines the task selects, assemble the response.

    The brute-force baseline is skipped (null in the response) whenever the
    pair space exceeds ``max_exact_pairs``; discovery switches to sampled
    differences at the same threshold and says so in the warnings.
    """
    ds = dataset.head(request.row_limit) if request.row_limit is not None else dataset
    statement = _statement_from_request(request)
    begin = slice_region(ds, statement, "begin")
    end = slice_region(ds, statement, "end")
    total_pairs = pair_space_size(begin, end, request.window)
    if total_pairs == 0:
        raise EmptyPairSpace("no (begin, end) pairs exist under the given constraint")

    wants_support = request.task in ("support", "all")
    wants_mss = request.task in ("mss", "all")
    wants_tightest = request.task in ("tightest", "all")
    discovery_sampled = (wants_mss or wants_tightest) and total_pairs > max_exact_pairs
    sampling_used = wants_support or discovery_sampled

    warnings: list[str] = []
    for name, series in (("begin", begin), ("end", end)):
        if series.dropped_rows:
            warnings.append(
                f"{name} region: dropped {series.dropped_rows} row(s) with "
                "missing or unparseable values"
            )

    seed = request.sampling.seed
    if sampling_used and seed is None:
        seed = secrets.randbits(32)
    budgets = tuple(request.sampling.budgets) if request.sampling.budgets else DEFAULT_BUDGETS
    config = SamplingConfig(budgets=budgets, seed=seed if seed is not None else 0)

    support_section = None
    if wants_support:
        exact = support_exact(begin, end, statement.bounds, request.window)
        baseline = None
        if total_pairs <= max_exact_pairs:
            baseline = support_baseline(begin, end, statement.bounds, request.window)
        else:
            warnings.append(
                f"exact baseline skipped: pair space {total_pairs} exceeds "
                f"{max_exact_pairs}"
            )
        estimates = support_random(begin, end, statement.bounds, request.window, config)
        support_section = SupportSection(
            exact_baseline=None
            if baseline is None
            else SupportResultModel(
                support=baseline.support,
                supporting_pairs=baseline.supporting_pairs,
                total_pairs=baseline.total_pairs,
            ),
            exact=SupportResultModel(
                support=exact.support,
                supporting_pairs=exact.supporting_pairs,
                total_pairs=exact.total_pairs,
            ),
            random=[
                SupportEstimateModel(
                    budget=e.budget, estimate=e.estimate, epsilon95=e.epsilon95
                )
                for e in estimates
            ],
        )

    mss_model = None
    tightest_model = None
    if wants_mss or wants_tightest:
        diffs = build_differences(begin, end, request.window, max_exact_pairs, config)
        if diffs.sampled:
            warnings.append(
                f"discovery ran on {diffs.sample_budget} sampled differences; "
                "reported supports are estimates"
            )
        if wants_mss:
            found = most_supported(diffs, request.mss_width)
            mss_model = DiscoveredModel(
                lo=found.lo, hi=found.hi, support=found.support, width=found.width
            )
        if wants_tightest:
            found = tightest(diffs, request.tightest_support)
            tightest_model = DiscoveredModel(
                lo=found.lo, hi=found.hi, support=found.support, width=found.width
            )

    echo = EvaluationEcho(
        dataset_id=request.dataset_id,
        task=request.task,
        target_column=request.target_column,
        trend_column=request.trend_column,
        trend_is_date=request.trend_is_date,
        bounds=request.bounds if wants_support else None,
        regions=request.regions,
        window=request.window,
        row_limit=request.row_limit,
        sampling=SamplingSpec(budgets=list(budgets), seed=seed) if sampling_used else None,
        mss_width=request.mss_width if wants_mss else None,
        tightest_support=request.tightest_support if wants_tightest else None,
    )
    return EvaluationResponse(
        support=support_section,
        mss=mss_model,
        tightest=tightest_model,
        echo=echo,
        warnings=warnings,
    )

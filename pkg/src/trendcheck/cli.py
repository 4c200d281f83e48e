"""Command-line front door: evaluate statements and discover alternatives.

``trendcheck support|mss|tightest|all`` evaluate a statement against a CSV
file and print a results table (or, with ``--json``, the same payload the
HTTP service would return for the equivalent request).  ``trendcheck
serve`` boots the HTTP service over a dataset directory.

Exit codes: 0 success, 1 data/evaluation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .discovery import DEFAULT_MAX_EXACT_PAIRS
from .errors import TrendcheckError
from .evaluation import (
    BoundsSpec,
    EvaluationRequest,
    EvaluationResponse,
    RegionSpec,
    RegionsSpec,
    SamplingSpec,
    run_evaluation,
)
from .ingest import Dataset


def _parse_range(text: str) -> tuple[str, str]:
    parts = text.split("..")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise argparse.ArgumentTypeError(
            f"expected FROM..TO (e.g. 1..5 or '2012-12-01 00:00:00..2013-03-01 01:00:00'), got {text!r}"
        )
    return parts[0], parts[1]


def _parse_budgets(text: str) -> list[int]:
    try:
        budgets = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"budgets must be comma-separated integers, got {text!r}")
    if not budgets or any(b < 1 for b in budgets):
        raise argparse.ArgumentTypeError("budgets must be positive integers")
    return budgets


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _support_threshold(text: str) -> float:
    value = float(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"expected a value in (0, 1], got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_statement_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dataset", required=True, help="path to the CSV file")
    parser.add_argument("--target", required=True, help="target (value) column")
    parser.add_argument("--trend", required=True, help="trend (axis) column")
    parser.add_argument("--dates", action="store_true", help="trend column holds dates")
    parser.add_argument(
        "--begin", required=True, type=_parse_range, metavar="FROM..TO",
        help="begin support region (quote date-times)",
    )
    parser.add_argument(
        "--end", required=True, type=_parse_range, metavar="FROM..TO",
        help="end support region",
    )
    parser.add_argument("--lower", type=float, default=None, help="lower bound (default -inf)")
    parser.add_argument("--upper", type=float, default=None, help="upper bound (default +inf)")
    parser.add_argument(
        "--window", type=_positive_float, default=None,
        help="exact window length between begin and end (seconds for dates)",
    )
    parser.add_argument("--rows", type=_positive_int, default=None, help="use only the first N rows")
    parser.add_argument(
        "--budgets", type=_parse_budgets, default=None, metavar="N1,N2,...",
        help="sampling budgets (default: 1000,5000,10000,50000,100000)",
    )
    parser.add_argument("--seed", type=int, default=None, help="sampling seed")
    parser.add_argument("--json", action="store_true", help="print the service-equivalent JSON payload")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trendcheck",
        description="Check how well a trendline statement is supported by the data, "
        "and discover better-supported or tighter alternatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_support = sub.add_parser("support", help="compute the statement's support value")
    _add_statement_flags(p_support)

    p_mss = sub.add_parser("mss", help="most supported statement of a given width")
    _add_statement_flags(p_mss)
    p_mss.add_argument("--width", required=True, type=_positive_float, help="statement range width (> 0)")

    p_tight = sub.add_parser("tightest", help="tightest statement at a support threshold")
    _add_statement_flags(p_tight)
    p_tight.add_argument(
        "--min-support", required=True, type=_support_threshold, help="support threshold in (0, 1]"
    )

    p_all = sub.add_parser("all", help="support, MSS, and tightest in one run")
    _add_statement_flags(p_all)
    p_all.add_argument("--width", required=True, type=_positive_float)
    p_all.add_argument("--min-support", required=True, type=_support_threshold)

    p_serve = sub.add_parser("serve", help="serve the HTTP API over a dataset directory")
    p_serve.add_argument("--datasets", required=True, help="directory of CSV files")
    p_serve.add_argument(
        "--port", type=int, default=int(os.environ.get("TRENDCHECK_PORT", 8000))
    )
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--ui", default=None, help="directory with a built web client to serve at /")

    return parser


def _request_from_args(args: argparse.Namespace) -> EvaluationRequest:
    return EvaluationRequest(
        dataset_id=Path(args.dataset).stem,
        task=args.command,
        target_column=args.target,
        trend_column=args.trend,
        trend_is_date=args.dates,
        bounds=BoundsSpec(lower=args.lower, upper=args.upper),
        regions=RegionsSpec(
            begin=RegionSpec(from_=args.begin[0], to=args.begin[1]),
            end=RegionSpec(from_=args.end[0], to=args.end[1]),
        ),
        window=args.window,
        row_limit=args.rows,
        sampling=SamplingSpec(budgets=args.budgets, seed=args.seed),
        mss_width=getattr(args, "width", None),
        tightest_support=getattr(args, "min_support", None),
    )


def _print_human(response: EvaluationResponse) -> None:
    echo = response.echo
    lines = [f"dataset: {echo.dataset_id}   task: {echo.task}"]
    if response.support is not None:
        sup = response.support
        if sup.exact_baseline is not None:
            b = sup.exact_baseline
            lines.append(
                f"support (baseline): {b.support:.3f}  "
                f"[{b.supporting_pairs}/{b.total_pairs} pairs]"
            )
        else:
            lines.append("support (baseline): skipped (pair space too large)")
        e = sup.exact
        lines.append(
            f"support (exact): {e.support:.3f}  [{e.supporting_pairs}/{e.total_pairs} pairs]"
        )
        for est in sup.random:
            lines.append(
                f"support (random, N={est.budget}): {est.estimate:.3f} "
                f"(95% radius {est.epsilon95:.3f})"
            )
    if response.mss is not None:
        m = response.mss
        lines.append(
            f"most supported: lo={m.lo:.3f} hi={m.hi:.3f} support={m.support:.3f} "
            f"width={m.width:.3f}"
        )
    if response.tightest is not None:
        t = response.tightest
        lines.append(
            f"tightest: lo={t.lo:.3f} hi={t.hi:.3f} width={t.width:.3f} "
            f"support={t.support:.3f}"
        )
    for warning in response.warnings:
        lines.append(f"note: {warning}")
    print("\n".join(lines))


def _run_evaluate_command(args: argparse.Namespace) -> int:
    request = _request_from_args(args)
    dataset = Dataset.load(args.dataset)
    max_pairs = int(os.environ.get("TRENDCHECK_MAX_EXACT_PAIRS", DEFAULT_MAX_EXACT_PAIRS))
    response = run_evaluation(dataset, request, max_pairs)
    if args.json:
        print(response.model_dump_json(indent=2, by_alias=True))
    else:
        _print_human(response)
    return 0


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    if not Path(args.datasets).is_dir():
        print(f"error: dataset directory not found: {args.datasets}", file=sys.stderr)
        return 1
    max_pairs = int(os.environ.get("TRENDCHECK_MAX_EXACT_PAIRS", DEFAULT_MAX_EXACT_PAIRS))
    app = create_app(args.datasets, max_pairs, static_dir=args.ui)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    except (OSError, SystemExit) as exc:
        print(f"error: could not serve: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "serve":
            return _run_serve(args)
        return _run_evaluate_command(args)
    except (TrendcheckError, FileNotFoundError, NotADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

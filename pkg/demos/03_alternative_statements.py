"""Discovering what the data actually supports.

After a claim scores near zero, the natural follow-up is: what bounds
*would* the same pair space support?  Both discovery tasks run on the
sorted list of pair differences: the most supported statement slides a
fixed-width window to maximal coverage, and the tightest statement finds
the narrowest window reaching a support threshold.
"""

from pathlib import Path

from trendcheck import (
    Dataset,
    Region,
    RegionPair,
    Statement,
    StatementBounds,
    build_differences,
    most_supported,
    parse_trend_value,
    slice_region,
    tightest,
)
from trendcheck.sampledata import write_hourly_temperatures

DATA = Path(__file__).parent / "_data" / "temperature.csv"
if not DATA.exists():
    DATA.parent.mkdir(exist_ok=True)
    write_hourly_temperatures(DATA)

dataset = Dataset.load(DATA)


def at(stamp: str) -> float:
    return parse_trend_value(stamp, is_date=True)


statement = Statement(
    target_column="Detroit",
    trend_column="datetime",
    trend_is_date=True,
    bounds=StatementBounds(hi=0.0),
    regions=RegionPair(
        begin=Region(at("2012-12-01 00:00:00"), at("2013-03-01 01:00:00")),
        end=Region(at("2013-06-01 00:00:00"), at("2013-09-01 01:00:00")),
    ),
)
winter = slice_region(dataset, statement, "begin")
summer = slice_region(dataset, statement, "end")

diffs = build_differences(winter, summer)
print(f"sorted {len(diffs):,} summer-minus-winter differences "
      f"(range {diffs.diffs[0]:+.1f} .. {diffs.diffs[-1]:+.1f} K)")
print()

found = most_supported(diffs, width=40.0)
print("most supported statement of width 40:")
print(f"  'summers are warmer by {found.lo:.3f} to {found.hi:.3f} K' "
      f"-> support {found.support:.3f}")
print()

for tau in (0.99, 0.9, 0.5):
    star = tightest(diffs, tau)
    print(f"tightest statement at support >= {tau}:")
    print(f"  bounds ({star.lo:.3f}, {star.hi:.3f}), range {star.width:.3f}, "
          f"achieved support {star.support:.3f}")

"""Three ways to score one statement.

A tiny four-point series is enough to watch all three support engines
agree: the brute-force reference enumerates the four (begin, end) pairs,
the binary-search engine reproduces the counts, and the sampler converges
on the same proportion with a confidence radius.
"""

import numpy as np

from trendcheck import (
    PointSeries,
    SamplingConfig,
    StatementBounds,
    support_baseline,
    support_exact,
    support_random,
)

# y values 10, 12 in the begin region; 11, 15 in the end region.
# The four pair differences are -1, +1, +3, +5.
begin = PointSeries(xs=np.array([1.0, 2.0]), ys=np.array([10.0, 12.0]))
end = PointSeries(xs=np.array([3.0, 4.0]), ys=np.array([11.0, 15.0]))

# Statement: "the value did not fall" (difference >= 0).
claim = StatementBounds(lo=0.0)

print("pair differences: -1, +1, +3, +5")
print()

baseline = support_baseline(begin, end, claim)
print(f"brute force   : {baseline.support:.3f} "
      f"({baseline.supporting_pairs}/{baseline.total_pairs} pairs)")

exact = support_exact(begin, end, claim)
print(f"binary search : {exact.support:.3f} "
      f"({exact.supporting_pairs}/{exact.total_pairs} pairs)")

for est in support_random(begin, end, claim, config=SamplingConfig((1_000, 10_000), seed=7)):
    print(f"sampled N={est.budget:<6}: {est.estimate:.3f} (±{est.epsilon95:.3f} at 95%)")

print()
print("Restricting to pairs exactly 2 steps apart keeps only (x=1 -> x=3)")
print("and (x=2 -> x=4), with differences +1 and +3:")
windowed = support_exact(begin, end, claim, window=2.0)
print(f"windowed      : {windowed.support:.3f} "
      f"({windowed.supporting_pairs}/{windowed.total_pairs} pairs)")

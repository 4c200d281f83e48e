import numpy as np
import pytest

from trendcheck import (
    EmptyPairSpace,
    PointSeries,
    SamplingConfig,
    StatementBounds,
    hoeffding_radius,
    pair_space_size,
    support_baseline,
    support_exact,
    support_random,
)

from conftest import make_lattice_instance, random_lattice_bounds
from oracles import brute_support

NON_NEGATIVE = StatementBounds(lo=0.0)


class TestToyGroundTruth:
    """Hand-enumerated values for the 4-point series (diffs -1, 1, 3, 5)."""

    def test_baseline_non_negative_change(self, toy_begin, toy_end):
        result = support_baseline(toy_begin, toy_end, NON_NEGATIVE)
        assert (result.supporting_pairs, result.total_pairs) == (3, 4)
        assert result.support == 0.75

    def test_exact_matches_baseline(self, toy_begin, toy_end):
        assert support_exact(toy_begin, toy_end, NON_NEGATIVE) == support_baseline(
            toy_begin, toy_end, NON_NEGATIVE
        )

    def test_unbounded_statement_fully_supported(self, toy_begin, toy_end):
        for fn in (support_baseline, support_exact):
            assert fn(toy_begin, toy_end, StatementBounds()).support == 1.0

    def test_windowed_pairs(self, toy_begin, toy_end):
        # only (x=1 -> x=3) and (x=2 -> x=4) are 2 apart; diffs 1 and 3
        for fn in (support_baseline, support_exact):
            result = fn(toy_begin, toy_end, NON_NEGATIVE, window=2.0)
            assert (result.supporting_pairs, result.total_pairs) == (2, 2)
            assert result.support == 1.0

    def test_upper_bound_zero(self, toy_begin, toy_end):
        result = support_exact(toy_begin, toy_end, StatementBounds(hi=0.0))
        assert result.support == 0.25  # only the -1 diff

    def test_unreachable_interval(self, toy_begin, toy_end):
        assert support_exact(toy_begin, toy_end, StatementBounds(10.0, 20.0)).support == 0.0

    def test_pair_space_size(self, toy_begin, toy_end):
        assert pair_space_size(toy_begin, toy_end) == 4
        assert pair_space_size(toy_begin, toy_end, window=2.0) == 2
        assert pair_space_size(toy_begin, toy_end, window=7.5) == 0


class TestOracleEquivalence:
    """Library engines vs. the pure-Python pair loop on random lattice instances."""

    @pytest.mark.parametrize("windowed", [False, True])
    def test_matches_brute_force(self, windowed):
        rng = np.random.default_rng(414 if windowed else 707)
        for _ in range(60):
            begin, end, window = make_lattice_instance(rng, max_points=40, windowed=windowed)
            lo, hi = random_lattice_bounds(rng)
            expect = brute_support(begin.xs, begin.ys, end.xs, end.ys, lo, hi, window)
            bounds = StatementBounds(lo, hi)
            for fn in (support_baseline, support_exact):
                got = fn(begin, end, bounds, window)
                assert (got.supporting_pairs, got.total_pairs) == expect

    def test_duplicate_x_values_bind_every_matching_pair(self):
        begin = PointSeries(np.array([1.0, 1.0]), np.array([0.0, 10.0]))
        end = PointSeries(np.array([3.0, 3.0, 4.0]), np.array([1.0, 2.0, 5.0]))
        for fn in (support_baseline, support_exact):
            result = fn(begin, end, NON_NEGATIVE, window=2.0)
            # 2 begin points x 2 end points at x=3
            assert result.total_pairs == 4
            assert result.supporting_pairs == 2  # diffs 1, 2 from y_b=0; -8, -9 from y_b=10


class TestEmptyPairSpace:
    def test_empty_series(self, toy_end):
        empty = PointSeries(np.array([]), np.array([]))
        for fn in (support_baseline, support_exact):
            with pytest.raises(EmptyPairSpace):
                fn(empty, toy_end, NON_NEGATIVE)

    def test_window_matching_nothing(self, toy_begin, toy_end):
        for fn in (support_baseline, support_exact):
            with pytest.raises(EmptyPairSpace):
                fn(toy_begin, toy_end, NON_NEGATIVE, window=7.5)
        with pytest.raises(EmptyPairSpace):
            support_random(toy_begin, toy_end, NON_NEGATIVE, window=7.5)


class TestProperties:
    def test_enlarging_bounds_never_lowers_support(self):
        rng = np.random.default_rng(99)
        for _ in range(25):
            begin, end, _ = make_lattice_instance(rng, max_points=30)
            lo, hi = random_lattice_bounds(rng)
            narrow = StatementBounds(lo, hi)
            wide = StatementBounds(
                lo - 1.0 if np.isfinite(lo) else lo, hi + 1.0 if np.isfinite(hi) else hi
            )
            for fn in (support_baseline, support_exact):
                assert fn(begin, end, wide).support >= fn(begin, end, narrow).support
            config = SamplingConfig(budgets=(500,), seed=5)
            narrow_est = support_random(begin, end, narrow, config=config)[0]
            wide_est = support_random(begin, end, wide, config=config)[0]
            assert wide_est.estimate >= narrow_est.estimate  # same sampled pairs

    def test_mirror_symmetries(self):
        # each transform flips the sign of the difference, so mirroring the
        # bounds preserves support; composing both flips restores the
        # original difference and the original bounds apply
        rng = np.random.default_rng(1234)
        for _ in range(25):
            begin, end, _ = make_lattice_instance(rng, max_points=30)
            lo, hi = random_lattice_bounds(rng)
            mirrored = StatementBounds(-hi, -lo)
            for fn in (support_baseline, support_exact):
                direct = fn(begin, end, StatementBounds(lo, hi)).support
                negated = fn(
                    PointSeries(begin.xs, -begin.ys),
                    PointSeries(end.xs, -end.ys),
                    mirrored,
                ).support
                swapped = fn(end, begin, mirrored).support
                both = fn(
                    PointSeries(end.xs, -end.ys),
                    PointSeries(begin.xs, -begin.ys),
                    StatementBounds(lo, hi),
                ).support
                assert direct == negated == swapped == both


class TestSampling:
    def test_one_estimate_per_budget_in_order(self, toy_begin, toy_end):
        config = SamplingConfig(budgets=(100, 2_000, 700), seed=3)
        estimates = support_random(toy_begin, toy_end, NON_NEGATIVE, config=config)
        assert [e.budget for e in estimates] == [100, 2_000, 700]

    def test_default_config_yields_five_estimates(self, toy_begin, toy_end):
        estimates = support_random(toy_begin, toy_end, NON_NEGATIVE)
        assert [e.budget for e in estimates] == [1_000, 5_000, 10_000, 50_000, 100_000]

    def test_deterministic_replay(self, toy_begin, toy_end):
        config = SamplingConfig(budgets=(1_000, 5_000), seed=42)
        first = support_random(toy_begin, toy_end, NON_NEGATIVE, config=config)
        second = support_random(toy_begin, toy_end, NON_NEGATIVE, config=config)
        assert first == second

    def test_seed_changes_the_draw(self, toy_begin, toy_end):
        a = support_random(toy_begin, toy_end, NON_NEGATIVE, config=SamplingConfig((10_000,), 1))
        b = support_random(toy_begin, toy_end, NON_NEGATIVE, config=SamplingConfig((10_000,), 2))
        assert a[0].estimate != b[0].estimate

    def test_unbounded_estimate_is_exactly_one(self, toy_begin, toy_end):
        estimates = support_random(
            toy_begin, toy_end, StatementBounds(), config=SamplingConfig((50, 500), 9)
        )
        assert [e.estimate for e in estimates] == [1.0, 1.0]

    def test_estimate_near_exact_support(self, toy_begin, toy_end):
        config = SamplingConfig(budgets=(1_000,), seed=2024)
        est = support_random(toy_begin, toy_end, NON_NEGATIVE, config=config)[0]
        assert abs(est.estimate - 0.75) <= est.epsilon95
        assert est.epsilon95 == hoeffding_radius(1_000)

    def test_windowed_sampling_draws_only_matching_pairs(self, toy_begin, toy_end):
        # window 2 pairs have diffs {1, 3}: both non-negative, none above 4
        config = SamplingConfig(budgets=(2_000,), seed=8)
        est = support_random(toy_begin, toy_end, NON_NEGATIVE, window=2.0, config=config)[0]
        assert est.estimate == 1.0
        est_hi = support_random(
            toy_begin, toy_end, StatementBounds(lo=4.0), window=2.0, config=config
        )[0]
        assert est_hi.estimate == 0.0

    def test_concentration_smoke(self, toy_begin, toy_end):
        # full 100-seed check lives in the acceptance suite
        radius = hoeffding_radius(10_000)
        inside = sum(
            abs(
                support_random(
                    toy_begin, toy_end, NON_NEGATIVE, config=SamplingConfig((10_000,), seed)
                )[0].estimate
                - 0.75
            )
            <= radius
            for seed in range(20)
        )
        assert inside >= 18

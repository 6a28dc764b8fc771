import numpy as np
import pytest

from fhrfeat import TimeSeries
from fhrfeat.features import (
    exp_distribution_fit_rmse,
    mean_abs_dev_from_median,
    second_order_cv,
    trimmed_std_ratio,
)
from helpers import random_series


class TestSecondOrderCV:
    def test_constant_series_is_zero(self):
        assert second_order_cv(TimeSeries("c", np.full(3, 1.0))).value == 0.0

    def test_two_point_value(self):
        out = second_order_cv(TimeSeries("x", np.array([1.0, 3.0])))
        assert out.value == pytest.approx(0.5, abs=1e-12)

    def test_zero_mean_not_finite(self):
        out = second_order_cv(TimeSeries("x", np.array([-1.0, 1.0])))
        assert out.special == "NotFinite"

    def test_scale_invariant(self):
        for seed in range(10):
            ts = random_series(seed, n=300, loc=140, scale=5)
            scaled = TimeSeries("s", ts.values * 3.7)
            assert second_order_cv(scaled).value == pytest.approx(
                second_order_cv(ts).value, abs=1e-12
            )


class TestMeanAbsDevFromMedian:
    def test_constant_is_zero(self):
        assert mean_abs_dev_from_median(TimeSeries("c", np.full(5, 2.0))).value == 0.0

    def test_three_points(self):
        out = mean_abs_dev_from_median(TimeSeries("x", np.array([1.0, 2.0, 3.0])))
        assert out.value == pytest.approx(2 / 3, abs=1e-12)

    def test_skewed_three_points(self):
        out = mean_abs_dev_from_median(TimeSeries("x", np.array([0.0, 0.0, 3.0])))
        assert out.value == pytest.approx(1.0, abs=1e-12)

    def test_translation_invariant_and_scales_linearly(self):
        for seed in range(10):
            ts = random_series(seed, n=250)
            base = mean_abs_dev_from_median(ts).value
            shifted = mean_abs_dev_from_median(TimeSeries("s", ts.values + 17.25)).value
            scaled = mean_abs_dev_from_median(TimeSeries("m", ts.values * 2.5)).value
            assert shifted == pytest.approx(base, abs=1e-12)
            assert scaled == pytest.approx(2.5 * base, abs=1e-12)


class TestTrimmedStdRatio:
    def test_constant_degenerate(self):
        out = trimmed_std_ratio(TimeSeries("c", np.full(200, 3.0)))
        assert out.special == "Degenerate"

    def test_short_series_degenerate(self):
        out = trimmed_std_ratio(random_series(0, n=60))
        assert out.special == "Degenerate"

    def test_uniform_grid_hand_value(self):
        # 100 samples, 2% trim: {1, 2} and {99, 100} drop out
        ts = TimeSeries("g", np.arange(1.0, 101.0))
        expected = np.std(np.arange(3.0, 99.0), ddof=1) / np.std(
            np.arange(1.0, 101.0), ddof=1
        )
        assert trimmed_std_ratio(ts).value == pytest.approx(expected, abs=1e-12)

    def test_single_huge_outlier_collapses_ratio(self):
        rng = np.random.default_rng(42)
        x = rng.standard_normal(100)
        x[17] = 1000.0
        assert trimmed_std_ratio(TimeSeries("o", x)).value < 0.2

    def test_translation_invariant(self):
        for seed in range(10):
            ts = random_series(seed, n=400)
            base = trimmed_std_ratio(ts).value
            shifted = trimmed_std_ratio(TimeSeries("s", ts.values + 31.5)).value
            assert shifted == pytest.approx(base, abs=1e-12)


class TestExpDistributionFitRmse:
    def test_exponential_data_fits_better_than_uniform(self):
        exp_draws = np.random.default_rng(1).exponential(1.0, 10_000)
        uni_draws = np.random.default_rng(2).uniform(0.0, 1.0, 10_000)
        rmse_exp = exp_distribution_fit_rmse(TimeSeries("e", exp_draws)).value
        rmse_uni = exp_distribution_fit_rmse(TimeSeries("u", uni_draws)).value
        assert rmse_exp < rmse_uni

    def test_constant_degenerate(self):
        out = exp_distribution_fit_rmse(TimeSeries("c", np.full(100, 9.0)))
        assert out.special == "Degenerate"

    def test_translation_invariant(self):
        for seed in range(10):
            ts = random_series(seed, n=500)
            base = exp_distribution_fit_rmse(ts).value
            shifted = exp_distribution_fit_rmse(TimeSeries("s", ts.values + 40.0)).value
            assert shifted == pytest.approx(base, abs=1e-12)

import numpy as np
import pytest

from fhrfeat import TimeSeries
from fhrfeat.features import convex_hull_area, embedding_area_ratio, trev_numerator
from helpers import random_series
from oracles import gift_wrap_hull_area


class TestConvexHullArea:
    def test_unit_square(self):
        pts = np.array([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]], dtype=float)
        assert convex_hull_area(pts) == pytest.approx(1.0, abs=1e-12)

    def test_collinear_points_zero_area(self):
        pts = np.column_stack([np.arange(10.0), 2 * np.arange(10.0)])
        assert convex_hull_area(pts) == 0.0

    def test_matches_gift_wrapping_oracle(self):
        for seed in range(10):
            rng = np.random.default_rng(seed)
            pts = rng.standard_normal((300, 2))
            assert convex_hull_area(pts) == pytest.approx(
                gift_wrap_hull_area(pts), rel=1e-12, abs=1e-12
            )


class TestEmbeddingAreaRatio:
    def test_pure_ramp_degenerate(self):
        # embedding of a ramp is collinear, so the total hull area is zero
        out = embedding_area_ratio(TimeSeries("ramp", np.arange(1.0, 201.0)))
        assert out.special == "Degenerate"

    def test_bounded_by_unit_interval(self):
        for seed in range(5):
            out = embedding_area_ratio(random_series(seed, n=800))
            assert 0.0 <= out.value <= 1.0

    def test_matches_bruteforce_hull_oracle(self):
        from fhrfeat.correlation import first_zero_autocorr

        ts = random_series(77, n=5000)
        got = embedding_area_ratio(ts).value
        x = ts.values
        tau = first_zero_autocorr(ts, min(200, len(x) - 1))
        points = np.column_stack([x[:-tau], x[tau:]])
        centroid = points.mean(axis=0)
        dist = np.hypot(points[:, 0] - centroid[0], points[:, 1] - centroid[1])
        inner = points[dist < np.median(dist)]
        expected = gift_wrap_hull_area(inner) / gift_wrap_hull_area(points)
        assert got == pytest.approx(expected, abs=1e-9)

    def test_deterministic(self):
        ts = random_series(78, n=1000)
        assert embedding_area_ratio(ts) == embedding_area_ratio(ts)


class TestTrevNumerator:
    def test_three_point_example(self):
        out = trev_numerator(TimeSeries("x", np.array([1.0, 2.0, 4.0])), tau=1)
        assert out.value == pytest.approx(4.5, abs=1e-12)

    def test_ramp_with_unit_lag(self):
        out = trev_numerator(TimeSeries("r", np.arange(1.0, 101.0)), tau=1)
        assert out.value == pytest.approx(1.0, abs=1e-12)

    def test_constant_series_degenerate(self):
        out = trev_numerator(TimeSeries("c", np.full(100, 5.0)))
        assert out.special == "Degenerate"

    def test_odd_under_time_reversal(self):
        for seed in range(10):
            ts = random_series(seed, n=400)
            rev = TimeSeries("rev", ts.values[::-1].copy())
            for tau in (1, 3, 7):
                forward = trev_numerator(ts, tau=tau).value
                backward = trev_numerator(rev, tau=tau).value
                assert backward == pytest.approx(-forward, abs=1e-12)

    def test_auto_lag_comes_from_ami_minimum(self):
        from fhrfeat.correlation import first_min_auto_mutual_info

        ts = random_series(81, n=2000)
        tau = first_min_auto_mutual_info(ts, max_lag=50, n_bins=10)
        auto = trev_numerator(ts)
        forced = trev_numerator(ts, tau=tau)
        assert auto == forced

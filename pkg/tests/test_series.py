import numpy as np
import pytest

from fhrfeat import PreprocessConfig, Rejected, TimeSeries, interpolate_short_gaps, trim_and_filter
from helpers import MISSING, make_series

CFG = PreprocessConfig(max_interp_gap_samples=60, max_missing_fraction=0.2)


class TestTimeSeriesInvariants:
    def test_lengths_must_match(self):
        with pytest.raises(ValueError):
            TimeSeries("x", np.array([1.0, 2.0]), np.array([False]))

    def test_needs_at_least_one_sample(self):
        with pytest.raises(ValueError):
            TimeSeries("x", np.array([]), np.array([], dtype=bool))

    def test_sample_rate_positive(self):
        with pytest.raises(ValueError):
            TimeSeries("x", np.array([1.0]), np.array([False]), sample_rate_hz=0.0)

    def test_non_missing_samples_must_be_finite(self):
        with pytest.raises(ValueError):
            TimeSeries("x", np.array([1.0, np.inf]), np.array([False, False]))

    def test_mask_defaults_to_non_finite(self):
        ts = TimeSeries("x", np.array([1.0, np.nan, 3.0]))
        assert list(ts.missing_mask) == [False, True, False]


class TestInterpolateShortGaps:
    def test_single_gap_midpoint(self):
        ts = make_series([1, MISSING, 3])
        out = interpolate_short_gaps(ts, CFG)
        assert out.values.tolist() == [1.0, 2.0, 3.0]
        assert not out.missing_mask.any()

    def test_gap_longer_than_threshold_unchanged(self):
        ts = make_series([1] + [MISSING] * 61 + [3])
        out = interpolate_short_gaps(ts, CFG)
        assert out.n_missing == 61
        np.testing.assert_array_equal(out.missing_mask, ts.missing_mask)

    def test_two_sample_gap_follows_the_line(self):
        # line through (0, 0) and (3, 3) evaluated at t = 1, 2
        ts = make_series([0, MISSING, MISSING, 3])
        out = interpolate_short_gaps(ts, CFG)
        assert out.values.tolist() == [0.0, 1.0, 2.0, 3.0]

    def test_edge_gaps_left_alone(self):
        ts = make_series([MISSING, 1, 2, MISSING])
        out = interpolate_short_gaps(ts, CFG)
        assert out.n_missing == 2

    def test_idempotent(self):
        rng = np.random.default_rng(0)
        for trial in range(20):
            n = 200
            values = rng.standard_normal(n)
            mask = rng.random(n) < 0.2
            ts = TimeSeries("x", np.where(mask, np.nan, values), mask)
            once = interpolate_short_gaps(ts, CFG)
            twice = interpolate_short_gaps(once, CFG)
            np.testing.assert_array_equal(once.values[~once.missing_mask],
                                          twice.values[~twice.missing_mask])
            np.testing.assert_array_equal(once.missing_mask, twice.missing_mask)


class TestTrimAndFilter:
    def test_pure_edge_trim(self):
        out = trim_and_filter(make_series([MISSING, 1, 2, MISSING]), CFG)
        assert out.values.tolist() == [1.0, 2.0]

    def test_short_run_missing_fraction_rejects(self):
        # 30 isolated missing samples inside 100: nothing to splice, so the
        # remaining missing fraction is 0.30 and the record is rejected.
        values = []
        for i in range(100):
            values.append(MISSING if 0 < i < 61 and i % 2 == 1 else float(i))
        ts = make_series(values)
        assert ts.n_missing == 30
        out = trim_and_filter(ts, CFG)
        assert isinstance(out, Rejected)
        assert out.missing_fraction == pytest.approx(0.30)

    def test_long_interior_gap_spliced(self):
        ts = make_series([1, 2] + [MISSING] * 100 + [3, 4])
        out = trim_and_filter(ts, CFG)
        assert out.values.tolist() == [1.0, 2.0, 3.0, 4.0]
        assert not out.missing_mask.any()

    def test_all_missing_rejected(self):
        out = trim_and_filter(make_series([MISSING, MISSING]), CFG)
        assert isinstance(out, Rejected)
        assert out.missing_fraction == 1.0

    def test_output_never_has_missing(self):
        rng = np.random.default_rng(1)
        for trial in range(30):
            n = 120
            mask = rng.random(n) < rng.uniform(0.05, 0.5)
            mask[rng.integers(0, n)] = False  # keep at least one sample
            values = np.where(mask, np.nan, rng.standard_normal(n))
            out = trim_and_filter(TimeSeries("x", values, mask), CFG)
            if not isinstance(out, Rejected):
                assert out.n_missing == 0

    def test_keep_mode_counts_long_gaps_against_the_record(self):
        cfg = PreprocessConfig(max_interp_gap_samples=60,
                               max_missing_fraction=0.2,
                               splice_interior=False)
        ts = make_series([1, 2] + [MISSING] * 100 + [3, 4])
        out = trim_and_filter(ts, cfg)
        assert isinstance(out, Rejected)
        assert out.missing_fraction == pytest.approx(100 / 104)


class TestPreprocessComposition:
    def test_small_gaps_interpolated_and_kept(self):
        from fhrfeat import preprocess

        values = [float(i) for i in range(200)]
        for k in (40, 41, 90):
            values[k] = MISSING
        out = preprocess(make_series(values), CFG)
        assert out.n_missing == 0
        assert len(out) == 200

    def test_mostly_interpolable_record_still_rejected(self):
        # every other sample missing: interpolation could patch all of it,
        # but half the trace would then be reconstruction
        from fhrfeat import preprocess

        values = [1.0 if i % 2 == 0 else MISSING for i in range(101)]
        out = preprocess(make_series(values), CFG)
        assert isinstance(out, Rejected)
        assert out.missing_fraction == pytest.approx(50 / 101)

    def test_long_gap_within_budget_spliced(self):
        from fhrfeat import preprocess

        values = [float(i) for i in range(500)] + [MISSING] * 80 + [1.0, 2.0]
        out = preprocess(make_series(values), CFG)
        assert isinstance(out, Rejected) is False
        assert len(out) == 502


def test_config_validation():
    with pytest.raises(ValueError):
        PreprocessConfig(max_interp_gap_samples=0)
    with pytest.raises(ValueError):
        PreprocessConfig(max_missing_fraction=1.5)

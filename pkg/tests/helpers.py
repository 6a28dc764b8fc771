"""Builders shared across test modules."""

import numpy as np

from fhrfeat import TimeSeries

MISSING = object()  # sentinel for a missing sample in make_series literals


def make_series(values, sid="t", rate=4.0):
    """Build a TimeSeries from a list that may contain MISSING sentinels."""
    data = np.array(
        [np.nan if v is MISSING else float(v) for v in values], dtype=float
    )
    mask = np.array([v is MISSING for v in values], dtype=bool)
    return TimeSeries(sid, data, mask, sample_rate_hz=rate)


def random_series(seed, n=500, loc=135.0, scale=4.0, sid=None):
    rng = np.random.default_rng(seed)
    return TimeSeries(sid or f"r{seed}", loc + scale * rng.standard_normal(n))

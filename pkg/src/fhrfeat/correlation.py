"""Autocorrelation and auto mutual information primitives.

These back the delay choices made by the catalog features: the first zero
crossing of the autocorrelation function picks the embedding delay for the
two-dimensional embedding feature, and the first local minimum of the auto
mutual information picks the lag for the time-reversal statistic.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateSeries, LagTooLarge
from .series import TimeSeries


def _complete(series: TimeSeries) -> np.ndarray:
    if series.n_missing:
        raise ValueError("correlation primitives need a series with no missing values")
    return series.values


def autocorr(series: TimeSeries, lag: int) -> float:
    """Autocorrelation at the given lag, biased normalisation.

    Uses the global mean and the global (population) variance, dividing the
    lagged cross-product sum by the full-length sum of squares, which keeps
    the estimate inside [-1, 1] and exactly symmetric under time reversal.
    """
    x = _complete(series)
    n = len(x)
    if lag < 0:
        raise ValueError("lag must be non-negative")
    if lag >= n:
        raise LagTooLarge(f"lag {lag} >= series length {n}")
    centered = x - x.mean()
    denom = float(np.dot(centered, centered))
    if denom == 0.0:
        raise DegenerateSeries("autocorrelation undefined for a constant series")
    if lag == 0:
        return 1.0
    num = float(np.dot(centered[:-lag], centered[lag:]))
    return num / denom


def first_zero_autocorr(series: TimeSeries, max_lag: int) -> int:
    """Smallest lag >= 1 where the autocorrelation is <= 0, else ``max_lag``."""
    if max_lag < 1:
        raise ValueError("max_lag must be >= 1")
    for lag in range(1, max_lag + 1):
        if autocorr(series, lag) <= 0.0:
            return lag
    return max_lag


def _bin_indices(x: np.ndarray, n_bins: int) -> np.ndarray:
    lo, hi = float(x.min()), float(x.max())
    if hi <= lo:
        raise DegenerateSeries("all samples equal; cannot bin")
    idx = np.floor((x - lo) / (hi - lo) * n_bins).astype(np.int64)
    return np.minimum(idx, n_bins - 1)


def _mutual_info_nats(joint: np.ndarray) -> float:
    total = joint.sum()
    p = joint / total
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    nz = p > 0
    outer = np.outer(px, py)
    return float(np.sum(p[nz] * np.log(p[nz] / outer[nz])))


def auto_mutual_info(series: TimeSeries, lag: int, n_bins: int = 10) -> float:
    """Histogram estimate, in nats, of the mutual information between
    ``x_t`` and ``x_{t+lag}``.

    Both axes use the same ``n_bins`` equal-width bins spanning the full
    range of the series, so the estimate acts on raw amplitudes. The plug-in
    estimator is non-negative up to rounding.
    """
    x = _complete(series)
    if lag < 1:
        raise ValueError("lag must be >= 1")
    if n_bins < 2:
        raise ValueError("n_bins must be >= 2")
    if lag >= len(x):
        raise LagTooLarge(f"lag {lag} >= series length {len(x)}")
    idx = _bin_indices(x, n_bins)
    joint = np.bincount(
        idx[:-lag] * n_bins + idx[lag:], minlength=n_bins * n_bins
    ).reshape(n_bins, n_bins).astype(float)
    return _mutual_info_nats(joint)


def _binned_entropy_nats(series: TimeSeries, n_bins: int) -> float:
    """Entropy of the binned amplitude distribution; the lag-0 end of the
    auto-mutual-information profile."""
    idx = _bin_indices(_complete(series), n_bins)
    counts = np.bincount(idx, minlength=n_bins).astype(float)
    p = counts[counts > 0] / counts.sum()
    return float(-np.sum(p * np.log(p)))


def first_min_auto_mutual_info(series: TimeSeries, max_lag: int, n_bins: int = 10) -> int:
    """First local minimum of the auto-mutual-information profile.

    Scans lags 1..max_lag, returning the smallest lag that is strictly below
    its predecessor and not above its successor. Plateaus do not count as
    minima. Returns ``max_lag`` when the profile has no interior minimum.
    """
    if max_lag < 1:
        raise ValueError("max_lag must be >= 1")
    prev = _binned_entropy_nats(series, n_bins)
    curr = auto_mutual_info(series, 1, n_bins)
    for lag in range(1, max_lag):
        nxt = auto_mutual_info(series, lag + 1, n_bins)
        if curr < prev and curr <= nxt:
            return lag
        prev, curr = curr, nxt
    return max_lag

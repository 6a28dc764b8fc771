"""Features of the amplitude distribution, ignoring time ordering."""

from __future__ import annotations

import numpy as np

from ..errors import NumericalFailure
from ..series import TimeSeries
from .fitting import fit_exp_pdf_rate
from .values import FeatureValue


def second_order_cv(series: TimeSeries) -> FeatureValue:
    """Squared coefficient of variation, (std / mean)^2 with sample std.

    NotFinite when the mean is zero. Invariant under positive rescaling of
    the series.
    """
    x = series.complete_values()
    mean = float(np.mean(x))
    if mean == 0.0:
        return FeatureValue.not_finite()
    sd = float(np.std(x, ddof=1)) if len(x) > 1 else 0.0
    return FeatureValue.of((sd / mean) ** 2)


def mean_abs_dev_from_median(series: TimeSeries) -> FeatureValue:
    """Mean absolute deviation from the median, in the series' own units."""
    x = series.complete_values()
    return FeatureValue.of(float(np.mean(np.abs(x - np.median(x)))))


def trimmed_std_ratio(series: TimeSeries, trim_fraction: float = 0.02) -> FeatureValue:
    """Ratio of the standard deviation after dropping both 2% tails to the
    full standard deviation.

    ceil(trim_fraction * N) samples come off each end of the sorted record.
    Values well below 1 flag records whose spread is carried by a few
    extreme samples. Needs at least 100 samples so each tail loses one or
    more; shorter records and zero-spread records are Degenerate.
    """
    x = series.complete_values()
    n = len(x)
    if n < 100:
        return FeatureValue.degenerate()
    sd_full = float(np.std(x, ddof=1))
    if sd_full == 0.0:
        return FeatureValue.degenerate()
    k = int(np.ceil(trim_fraction * n))
    trimmed = np.sort(x)[k : n - k]
    sd_trim = float(np.std(trimmed, ddof=1))
    return FeatureValue.of(sd_trim / sd_full)


def exp_distribution_fit_rmse(series: TimeSeries, n_bins: int = 30) -> FeatureValue:
    """Root-mean-square misfit of an exponential density to the value histogram.

    Values are shifted to start at zero, binned into ``n_bins`` equal-width
    density-normalised bins, and an exponential density is least-squares
    fitted over the bin centres. Low output means the amplitude distribution
    is close to exponential. Shifting the whole record by a constant leaves
    the result unchanged.
    """
    x = series.complete_values()
    if len(x) < n_bins:
        return FeatureValue.degenerate()
    z = x - x.min()
    top = float(z.max())
    if top == 0.0:
        return FeatureValue.degenerate()
    density, edges = np.histogram(z, bins=n_bins, range=(0.0, top), density=True)
    centers = 0.5 * (edges[:-1] + edges[1:])
    mean_z = float(np.mean(z))
    try:
        rate = fit_exp_pdf_rate(centers, density, rate0=1.0 / mean_z)
    except NumericalFailure:
        return FeatureValue.not_finite()
    fitted = rate * np.exp(-rate * centers)
    return FeatureValue.of(float(np.sqrt(np.mean((fitted - density) ** 2))))

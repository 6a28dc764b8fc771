"""Delay-based features: time-reversal asymmetry and embedding-space area.

Both pick their lag from the series itself: the time-reversal statistic at
the first minimum of the auto mutual information, the embedding feature at
the first zero crossing of the autocorrelation function.
"""

from __future__ import annotations

import numpy as np

from ..correlation import first_min_auto_mutual_info, first_zero_autocorr
from ..errors import DegenerateSeries, LagTooLarge
from ..series import TimeSeries
from .geometry import convex_hull_area
from .values import FeatureValue


def trev_numerator(
    series: TimeSeries,
    tau: int | None = None,
    max_lag: int = 50,
    n_bins: int = 10,
) -> FeatureValue:
    """Mean cubed lagged difference, <(x_{t+tau} - x_t)^3>.

    Odd under time reversal for a fixed lag, so it measures how asymmetric
    the series is when played backwards. When ``tau`` is not given it is the
    first minimum of the auto mutual information profile scanned up to
    ``max_lag``.
    """
    x = series.complete_values()
    try:
        if tau is None:
            tau = first_min_auto_mutual_info(series, max_lag=max_lag, n_bins=n_bins)
    except (DegenerateSeries, LagTooLarge):
        return FeatureValue.degenerate()
    if tau < 1 or tau >= len(x):
        return FeatureValue.degenerate()
    diffs = x[tau:] - x[:-tau]
    return FeatureValue.of(float(np.mean(diffs**3)))


def embedding_area_ratio(series: TimeSeries, max_lag: int = 200) -> FeatureValue:
    """Hull-area ratio of the inner half of a 2-D time-delay embedding.

    Embeds the series as points (x_t, x_{t+tau}) with tau the first zero of
    the autocorrelation, splits points at the median distance to the point
    cloud's centroid (strictly-below-median points form the inner set), and
    returns inner hull area / total hull area. Lies in [0, 1]; Degenerate
    when the embedded points are collinear.
    """
    x = series.complete_values()
    try:
        tau = first_zero_autocorr(series, max_lag=min(max_lag, len(x) - 1))
    except (DegenerateSeries, LagTooLarge):
        return FeatureValue.degenerate()
    if tau >= len(x):
        return FeatureValue.degenerate()
    points = np.column_stack([x[:-tau], x[tau:]])
    if len(points) < 3:
        return FeatureValue.degenerate()
    total_area = convex_hull_area(points)
    if total_area == 0.0:
        return FeatureValue.degenerate()
    centroid = points.mean(axis=0)
    dist = np.hypot(points[:, 0] - centroid[0], points[:, 1] - centroid[1])
    inner = points[dist < np.median(dist)]
    inner_area = convex_hull_area(inner) if len(inner) >= 3 else 0.0
    return FeatureValue.of(inner_area / total_area)

"""Approximate and sample entropy, plus their windowed spread statistics.

Both regularity measures count how often templates of ``m`` consecutive
samples that match within a tolerance ``r`` keep matching when extended by
one sample. Matching uses the Chebyshev (max-coordinate) distance; the
tolerance is ``r_frac`` times the standard deviation of the window being
scored, so each window is judged on its own amplitude scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateSeries, SeriesTooShort
from ..series import TimeSeries
from .values import FeatureValue

MEAN_APEN = "mean_apen"
STD_SAMPEN = "std_sampen"


@dataclass(frozen=True)
class EntropyParams:
    m: int = 1
    r_frac: float = 0.2

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("embedding dimension m must be >= 1")
        if not self.r_frac > 0:
            raise ValueError("r_frac must be positive")


@dataclass(frozen=True)
class LocalWindowParams:
    window_len: int = 200
    n_windows: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.window_len < 20:
            raise ValueError("window_len must be >= 20")
        if self.n_windows < 2:
            raise ValueError("n_windows must be >= 2")


def _chebyshev_match_matrix(x: np.ndarray, m: int, r: float) -> np.ndarray:
    """Boolean matrix: templates i and j of length m match within r."""
    d = np.abs(x[:, None] - x[None, :])
    within = d <= r
    for k in range(1, m):
        within = within[:-1, :-1] & (d[k:, k:] <= r)
    return within


def apen(window, p: EntropyParams = EntropyParams()) -> float:
    """Approximate entropy with self-matches included.

    Phi(k) averages the log of each template's match proportion among all
    N-k+1 templates of length k; the result is Phi(m) - Phi(m+1). Counting a
    template against itself keeps every log argument positive.
    """
    x = np.asarray(window, dtype=float)
    if len(x) < p.m + 2:
        raise SeriesTooShort(f"apen needs at least m+2={p.m + 2} samples")
    sd = float(np.std(x, ddof=1))
    if sd == 0.0:
        raise DegenerateSeries("apen undefined for a constant window")
    r = p.r_frac * sd

    def phi(k: int) -> float:
        match = _chebyshev_match_matrix(x, k, r)
        counts = match.sum(axis=1)
        return float(np.mean(np.log(counts / match.shape[0])))

    return phi(p.m) - phi(p.m + 1)


def sampen(window, p: EntropyParams = EntropyParams()) -> float:
    """Sample entropy with self-matches excluded: -ln(A / B).

    B counts ordered template pairs (i != j) of length m that match within
    r, A the pairs that still match at length m+1; both restrict i and j to
    the N-m templates that can be extended. Returns +inf when no pair keeps
    matching at length m+1 (callers map that to a NotFinite special).
    """
    x = np.asarray(window, dtype=float)
    if len(x) < p.m + 2:
        raise SeriesTooShort(f"sampen needs at least m+2={p.m + 2} samples")
    sd = float(np.std(x, ddof=1))
    if sd == 0.0:
        raise DegenerateSeries("sampen undefined for a constant window")
    r = p.r_frac * sd

    match_m1 = _chebyshev_match_matrix(x, p.m + 1, r)
    a = int(match_m1.sum()) - match_m1.shape[0]
    n_templates = match_m1.shape[0]
    match_m = _chebyshev_match_matrix(x, p.m, r)[:n_templates, :n_templates]
    b = int(match_m.sum()) - n_templates
    if a == 0 or b == 0:
        return float("inf")
    return float(-np.log(a / b))


def local_entropy_spread(
    series: TimeSeries,
    w: LocalWindowParams = LocalWindowParams(),
    p: EntropyParams = EntropyParams(),
    stat: str = MEAN_APEN,
) -> FeatureValue:
    """Mean local approximate entropy, or spread of local sample entropy.

    Draws ``n_windows`` window start positions uniformly at random (with
    replacement, from a generator seeded by ``w.seed``), scores each window
    with apen (for ``mean_apen``) or sampen (for ``std_sampen``), and
    summarises the finite per-window values with the mean or the sample
    standard deviation. Windows whose score is degenerate or non-finite are
    dropped; if more than half drop out, the feature is NotFinite.
    """
    if stat not in (MEAN_APEN, STD_SAMPEN):
        raise ValueError(f"unknown stat {stat!r}")
    x = series.complete_values()
    n = len(x)
    if n < w.window_len + 1:
        raise SeriesTooShort(
            f"need at least window_len+1={w.window_len + 1} samples, got {n}"
        )
    rng = np.random.default_rng(w.seed)
    starts = rng.integers(0, n - w.window_len + 1, size=w.n_windows)

    scores = []
    for s in starts:
        window = x[s : s + w.window_len]
        try:
            value = apen(window, p) if stat == MEAN_APEN else sampen(window, p)
        except DegenerateSeries:
            continue
        if np.isfinite(value):
            scores.append(value)
    n_excluded = w.n_windows - len(scores)
    if len(scores) < 2 or 2 * n_excluded > w.n_windows:
        return FeatureValue.not_finite()
    if stat == MEAN_APEN:
        return FeatureValue.of(float(np.mean(scores)))
    return FeatureValue.of(float(np.std(scores, ddof=1)))

"""Least-squares exponential fits used by the catalog features.

Two fits live here: ``y = a * exp(-b x)`` (for the transition-matrix
eigenvalue decay) and the exponential density ``f(z) = lam * exp(-lam z)``
(for the distribution-shape feature). Both reduce to a one-dimensional
search: the amplitude of the two-parameter model is linear given the decay
rate, so it is profiled out in closed form. The remaining parameter is
located on a coarse deterministic grid (seeded with a log-linear regression
estimate) and refined by golden-section search to a 1e-10 parameter
tolerance within 200 iterations.
"""

from __future__ import annotations

import numpy as np

from ..errors import FitDegenerate, NumericalFailure
from ..util import as_finite_array

_PARAM_TOL = 1e-10
_MAX_ITER = 200
_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def _safe_exp(t: np.ndarray) -> np.ndarray:
    return np.exp(np.clip(t, -700.0, 700.0))


def _golden_min(f, lo: float, hi: float) -> float:
    """Golden-section minimum of f on [lo, hi] to _PARAM_TOL width."""
    c = hi - _GOLDEN * (hi - lo)
    d = lo + _GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(_MAX_ITER):
        if hi - lo < _PARAM_TOL:
            break
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - _GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _GOLDEN * (hi - lo)
            fd = f(d)
    return (lo + hi) / 2.0


def _log_linear_rate(xs: np.ndarray, ys: np.ndarray) -> float:
    """Decay-rate estimate from a straight-line fit of log|y|."""
    for sign in (1.0, -1.0):
        keep = sign * ys > 0
        if keep.sum() >= 2 and len(np.unique(xs[keep])) >= 2:
            slope, _ = np.polyfit(xs[keep], np.log(sign * ys[keep]), 1)
            return -float(slope)
    return 0.0


def fit_exp_decay(xs, ys) -> tuple[float, float, float]:
    """Least-squares fit of ``y = a * exp(-b x)``.

    Returns ``(a, b, adj_r2)``; the adjusted R-squared applies the
    two-parameter correction 1 - (1 - R2) (n - 1) / (n - 3).
    """
    xs = as_finite_array(xs, "xs")
    ys = as_finite_array(ys, "ys")
    if len(xs) != len(ys):
        raise ValueError("xs and ys must have equal length")
    n = len(xs)
    if n < 4:
        raise ValueError("need at least 4 points for a 2-parameter fit")
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    if ss_tot == 0.0:
        raise FitDegenerate("response values are constant")

    def amplitude_and_sse(b: float) -> tuple[float, float]:
        e = _safe_exp(-b * xs)
        denom = float(np.dot(e, e))
        if denom == 0.0 or not np.isfinite(denom):
            return 0.0, float("inf")
        a = float(np.dot(ys, e)) / denom
        resid = ys - a * e
        sse = float(np.dot(resid, resid))
        return a, sse if np.isfinite(sse) else float("inf")

    def sse(b: float) -> float:
        return amplitude_and_sse(b)[1]

    scale = max(float(np.max(np.abs(xs))), 1e-12)
    grid = np.linspace(-50.0 / scale, 50.0 / scale, 801)
    seed = _log_linear_rate(xs, ys)
    if np.isfinite(seed):
        grid = np.sort(np.append(grid, seed))
    costs = np.array([sse(b) for b in grid])
    if not np.any(np.isfinite(costs)):
        raise NumericalFailure("exponential fit cost is non-finite everywhere")
    k = int(np.argmin(costs))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, len(grid) - 1)]
    b = _golden_min(sse, float(lo), float(hi))
    a, best_sse = amplitude_and_sse(b)

    r2 = 1.0 - best_sse / ss_tot
    adj_r2 = 1.0 - (1.0 - r2) * (n - 1) / (n - 3)
    return a, float(b), float(adj_r2)


def fit_exp_pdf_rate(zs, densities, rate0: float) -> float:
    """Least-squares rate for the density model ``lam * exp(-lam z)``.

    The rate is searched on a log scale so it stays positive; ``rate0``
    (typically 1 / mean of the shifted samples) centres the search window.
    """
    zs = as_finite_array(zs, "zs")
    densities = as_finite_array(densities, "densities")
    if len(zs) != len(densities):
        raise ValueError("zs and densities must have equal length")
    if not rate0 > 0:
        raise ValueError("rate0 must be positive")

    def sse(theta: float) -> float:
        lam = float(np.exp(theta)) if theta < 700 else float("inf")
        if not np.isfinite(lam):
            return float("inf")
        resid = densities - lam * _safe_exp(-lam * zs)
        out = float(np.dot(resid, resid))
        return out if np.isfinite(out) else float("inf")

    center = float(np.log(rate0))
    grid = np.linspace(center - 15.0, center + 15.0, 601)
    costs = np.array([sse(t) for t in grid])
    if not np.any(np.isfinite(costs)):
        raise NumericalFailure("exponential density fit cost is non-finite everywhere")
    k = int(np.argmin(costs))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, len(grid) - 1)]
    theta = _golden_min(sse, float(lo), float(hi))
    return float(np.exp(theta))

"""Symbolic dynamics: equiprobable coarse-graining and transition spectra."""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateSeries, FitDegenerate, NumericalFailure
from ..series import TimeSeries
from .fitting import fit_exp_decay
from .values import FeatureValue


def symbolize_equiprobable(series: TimeSeries, alphabet: int) -> np.ndarray:
    """Map each sample to a quantile-bin index in 0..alphabet-1.

    Symbols are assigned by rank (stable order for ties), so bin occupancies
    differ by at most one and every symbol occurs at least once. Requires at
    least ``alphabet`` distinct values.
    """
    x = series.complete_values()
    if alphabet < 2:
        raise ValueError("alphabet must be >= 2")
    if len(np.unique(x)) < alphabet:
        raise DegenerateSeries(
            f"need >= {alphabet} distinct values to build {alphabet} quantile bins"
        )
    order = np.argsort(x, kind="stable")
    ranks = np.empty(len(x), dtype=np.int64)
    ranks[order] = np.arange(len(x))
    return (ranks * alphabet) // len(x)


def transition_matrix(symbols, alphabet: int) -> np.ndarray:
    """Row-stochastic 1-step transition matrix of a symbol sequence.

    Rows for symbols with no outgoing transitions are set uniform so every
    row still sums to one.
    """
    s = np.asarray(symbols, dtype=np.int64)
    if s.ndim != 1 or len(s) < 2:
        raise ValueError("need a 1-D symbol sequence with at least 2 entries")
    if s.min() < 0 or s.max() >= alphabet:
        raise ValueError("symbols out of range for the given alphabet")
    counts = np.bincount(
        s[:-1] * alphabet + s[1:], minlength=alphabet * alphabet
    ).reshape(alphabet, alphabet).astype(float)
    totals = counts.sum(axis=1)
    matrix = np.empty_like(counts)
    for i in range(alphabet):
        if totals[i] == 0:
            matrix[i] = 1.0 / alphabet
        else:
            matrix[i] = counts[i] / totals[i]
    return matrix


def min_eigenvalue(matrix) -> float:
    """Minimum real part over all eigenvalues of a square matrix."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    try:
        eigvals = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("eigenvalue iteration did not converge") from exc
    return float(eigvals.real.min())


def transition_mineig_decay_r2(series: TimeSeries, max_alphabet: int = 40) -> FeatureValue:
    """Adjusted R-squared of an exponential decay through minimum transition
    eigenvalues across alphabet sizes.

    For every alphabet size 2..max_alphabet the series is coarse-grained
    into equiprobable symbols, the 1-step transition matrix is formed, and
    its minimum eigenvalue (by real part) recorded; ``a * exp(-b n)`` is then
    least-squares fitted through those points and the adjusted R-squared of
    the fit is returned.
    """
    if max_alphabet < 2:
        raise ValueError("max_alphabet must be >= 2")
    sizes = np.arange(2, max_alphabet + 1, dtype=float)
    eigs = np.empty(len(sizes))
    try:
        for k, n in enumerate(range(2, max_alphabet + 1)):
            symbols = symbolize_equiprobable(series, n)
            eigs[k] = min_eigenvalue(transition_matrix(symbols, n))
    except DegenerateSeries:
        return FeatureValue.degenerate()
    try:
        _, _, adj_r2 = fit_exp_decay(sizes, eigs)
    except (FitDegenerate, NumericalFailure):
        return FeatureValue.not_finite()
    return FeatureValue.of(adj_r2)

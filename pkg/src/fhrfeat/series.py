"""Uniformly sampled time-series container and missing-value preprocessing.

A :class:`TimeSeries` pairs a float sample array with an explicit boolean
missing mask (heart-rate recordings routinely drop signal for stretches).
Preprocessing follows the usual recipe for such data: linearly interpolate
short interior dropouts, trim dropouts at the edges, splice out long interior
dropouts, and reject records that are mostly missing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

DEFAULT_SAMPLE_RATE_HZ = 4.0


@dataclass(frozen=True)
class TimeSeries:
    """An identified, uniformly sampled signal with a missing-value mask.

    ``values[i]`` is meaningful only where ``missing_mask[i]`` is False; by
    convention missing slots hold NaN. Non-missing samples must be finite.
    """

    id: str
    values: np.ndarray
    missing_mask: np.ndarray = None
    sample_rate_hz: float = DEFAULT_SAMPLE_RATE_HZ

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if self.missing_mask is None:
            mask = ~np.isfinite(values)
        else:
            mask = np.asarray(self.missing_mask, dtype=bool)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "missing_mask", mask)
        if values.ndim != 1 or mask.ndim != 1:
            raise ValueError("values and missing_mask must be one-dimensional")
        if len(values) != len(mask):
            raise ValueError("values and missing_mask must have equal length")
        if len(values) == 0:
            raise ValueError("a series needs at least one sample")
        if not self.sample_rate_hz > 0:
            raise ValueError("sample_rate_hz must be positive")
        if not np.all(np.isfinite(values[~mask])):
            raise ValueError("non-missing samples must be finite")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def n_missing(self) -> int:
        return int(self.missing_mask.sum())

    @property
    def missing_fraction(self) -> float:
        return self.n_missing / len(self)

    def complete_values(self) -> np.ndarray:
        """The sample array, requiring that nothing is missing."""
        if self.n_missing:
            raise ValueError(f"series {self.id!r} still has missing samples")
        return self.values


@dataclass(frozen=True)
class PreprocessConfig:
    """Thresholds for gap interpolation and record rejection.

    ``max_interp_gap_samples`` defaults to 60 (15 s at 4 Hz); interior gaps up
    to this length are linearly interpolated, longer ones are spliced out.
    ``max_missing_fraction`` bounds how much of the remaining record may still
    be missing before the record is rejected outright.
    """

    max_interp_gap_samples: int = 60
    max_missing_fraction: float = 0.2
    splice_interior: bool = True

    def __post_init__(self):
        if self.max_interp_gap_samples < 1:
            raise ValueError("max_interp_gap_samples must be >= 1")
        if not 0.0 <= self.max_missing_fraction <= 1.0:
            raise ValueError("max_missing_fraction must lie in [0, 1]")


@dataclass(frozen=True)
class Rejected:
    """Marker result for a record dropped because too much of it is missing."""

    id: str
    missing_fraction: float


def _missing_runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Contiguous missing runs as (start, stop) half-open index pairs."""
    runs = []
    n = len(mask)
    i = 0
    while i < n:
        if mask[i]:
            j = i
            while j < n and mask[j]:
                j += 1
            runs.append((i, j))
            i = j
        else:
            i += 1
    return runs


def interpolate_short_gaps(series: TimeSeries, cfg: PreprocessConfig) -> TimeSeries:
    """Fill interior missing runs of length <= max_interp_gap_samples linearly.

    Each short interior run is replaced by the straight line between its two
    finite neighbours and unmasked. Longer runs and runs touching either end
    of the record are left untouched. Applying the operation twice is the
    same as applying it once.
    """
    values = series.values.copy()
    mask = series.missing_mask.copy()
    n = len(values)
    for start, stop in _missing_runs(series.missing_mask):
        if start == 0 or stop == n:
            continue
        if stop - start > cfg.max_interp_gap_samples:
            continue
        left, right = values[start - 1], values[stop]
        span = stop - start + 1
        for k in range(start, stop):
            t = (k - start + 1) / span
            values[k] = left + t * (right - left)
        mask[start:stop] = False
    return replace(series, values=values, missing_mask=mask)


def trim_and_filter(series: TimeSeries, cfg: PreprocessConfig) -> TimeSeries | Rejected:
    """Trim edge dropouts, splice out long interior ones, reject sparse records.

    Order of operations:

    1. drop leading and trailing missing runs;
    2. splice out interior missing runs longer than
       ``max_interp_gap_samples`` by concatenating the flanking segments
       (skipped when ``splice_interior`` is False, in which case those runs
       count as ordinary missing data in step 3);
    3. if the fraction of samples still missing exceeds
       ``max_missing_fraction``, return :class:`Rejected` with that fraction;
    4. otherwise drop any remaining missing samples so the output contains
       none at all.

    Step 3 normally sees a fraction of zero for input that went through
    :func:`interpolate_short_gaps`; it is the safety net for records with
    short gaps that were never interpolated.
    """
    mask = series.missing_mask
    keep = np.flatnonzero(~mask)
    if keep.size == 0:
        return Rejected(series.id, 1.0)
    lo, hi = keep[0], keep[-1] + 1
    values = series.values[lo:hi]
    mask = mask[lo:hi]

    if cfg.splice_interior:
        drop = np.zeros(len(values), dtype=bool)
        for start, stop in _missing_runs(mask):
            if stop - start > cfg.max_interp_gap_samples:
                drop[start:stop] = True
        values = values[~drop]
        mask = mask[~drop]

    fraction = float(mask.mean())
    if fraction > cfg.max_missing_fraction:
        return Rejected(series.id, fraction)

    values = values[~mask]
    return replace(
        series,
        values=values,
        missing_mask=np.zeros(len(values), dtype=bool),
    )


def preprocess(series: TimeSeries, cfg: PreprocessConfig) -> TimeSeries | Rejected:
    """The standard front door: quality gate, interpolate, trim and filter.

    A record is rejected when the interior of its recorded span is more than
    ``max_missing_fraction`` missing in the raw input, before interpolation
    or splicing can patch it; a trace that is mostly reconstruction is not
    worth analysing. Survivors get short gaps interpolated and long gaps
    trimmed away.
    """
    mask = series.missing_mask
    keep = np.flatnonzero(~mask)
    if keep.size == 0:
        return Rejected(series.id, 1.0)
    interior = mask[keep[0] : keep[-1] + 1]
    fraction = float(interior.mean())
    if fraction > cfg.max_missing_fraction:
        return Rejected(series.id, fraction)
    return trim_and_filter(interpolate_short_gaps(series, cfg), cfg)

"""Seeded synthetic datasets shaped like heart-rate recordings.

Real labelled cohorts are not shippable, so the tooling generates its own:
a smooth autoregressive signal around a beats-per-minute baseline, with an
optional planted effect group whose records differ in baseline, noise
level, autocorrelation, and deceleration-like spikes. Cord pH is drawn so
that stronger planted effects go with lower pH, which gives the selection
and event-rate tooling something real to find.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dataset import LabeledDataset, OutcomeRecord, write_manifest, write_series_file
from .series import DEFAULT_SAMPLE_RATE_HZ, TimeSeries
from .util import derive_seed


@dataclass(frozen=True)
class SynthConfig:
    n_series: int = 40
    length: int = 7200  # 30 min at 4 Hz
    baseline_bpm: float = 135.0
    baseline_jitter_bpm: float = 3.0
    ar_coeff: float = 0.95
    noise_std: float = 1.2
    # Planted-effect group: fraction of records affected and how they differ.
    effect_fraction: float = 0.5
    effect_baseline_shift_bpm: float = -12.0
    effect_noise_scale: float = 2.5
    effect_ar_coeff: float = 0.6
    spike_rate: float = 0.004  # deceleration events per sample
    spike_magnitude_bpm: float = 30.0
    spike_fall_samples: int = 40  # gradual descent, abrupt recovery
    # Missing data injected before writing, to exercise preprocessing.
    n_missing_gaps: int = 2
    missing_gap_len: int = 30
    # Outcome model.
    control_ph_mean: float = 7.32
    effect_ph_mean: float = 6.95
    ph_std: float = 0.04
    control_compromise_rate: float = 0.05
    effect_compromise_rate: float = 0.7
    test_fraction: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.length < 400:
            raise ValueError("length must be >= 400 samples")
        if self.n_series < 4:
            raise ValueError("n_series must be >= 4")
        if not 0.0 <= self.effect_fraction <= 1.0:
            raise ValueError("effect_fraction must lie in [0, 1]")
        if not 0.0 <= self.test_fraction <= 1.0:
            raise ValueError("test_fraction must lie in [0, 1]")


def _clip_ph(value: float) -> float:
    return float(min(7.6, max(6.8, value)))


def _generate_one(cfg: SynthConfig, index: int, planted: bool) -> tuple[TimeSeries, OutcomeRecord]:
    rng = np.random.default_rng(derive_seed(cfg.seed, "series", index))
    strength = float(rng.uniform(0.75, 1.25)) if planted else 0.0

    baseline = cfg.baseline_bpm + float(rng.normal(0.0, cfg.baseline_jitter_bpm))
    ar = cfg.ar_coeff
    noise = cfg.noise_std
    if planted:
        baseline += cfg.effect_baseline_shift_bpm * strength
        noise *= 1.0 + (cfg.effect_noise_scale - 1.0) * strength
        ar = cfg.ar_coeff + (cfg.effect_ar_coeff - cfg.ar_coeff) * strength

    innovations = rng.normal(0.0, noise, size=cfg.length)
    x = np.empty(cfg.length)
    x[0] = baseline + innovations[0]
    for t in range(1, cfg.length):
        x[t] = baseline + ar * (x[t - 1] - baseline) + innovations[t]

    if planted and cfg.spike_rate > 0:
        # Deceleration-like events: the rate sags linearly for a few samples
        # and snaps back. One-sided and time-asymmetric on purpose, so both
        # outlier- and reversal-sensitive statistics can see the group.
        fall = cfg.spike_fall_samples
        n_events = int(rng.binomial(cfg.length, cfg.spike_rate * strength))
        starts = np.sort(rng.integers(0, cfg.length - fall, size=n_events))
        for start in starts:
            depth = float(rng.uniform(0.5, 1.0)) * cfg.spike_magnitude_bpm * strength
            x[start : start + fall] -= np.linspace(depth / fall, depth, fall)

    mask = np.zeros(cfg.length, dtype=bool)
    for _ in range(cfg.n_missing_gaps):
        gap_len = int(rng.integers(1, cfg.missing_gap_len + 1))
        start = int(rng.integers(1, cfg.length - gap_len - 1))
        mask[start : start + gap_len] = True
    values = x.copy()
    values[mask] = np.nan

    if planted:
        ph = cfg.effect_ph_mean - 0.04 * (strength - 1.0) + float(rng.normal(0.0, cfg.ph_std))
        compromise = bool(rng.random() < cfg.effect_compromise_rate)
    else:
        ph = cfg.control_ph_mean + float(rng.normal(0.0, cfg.ph_std))
        compromise = bool(rng.random() < cfg.control_compromise_rate)

    n_test = int(round(cfg.n_series * cfg.test_fraction))
    split = "test" if index < n_test else "train"

    sid = f"s{index:04d}"
    series = TimeSeries(sid, values, mask, sample_rate_hz=DEFAULT_SAMPLE_RATE_HZ)
    record = OutcomeRecord(sid, _clip_ph(ph), compromise, split)
    return series, record


def generate_synthetic(cfg: SynthConfig) -> LabeledDataset:
    """Generate the in-memory dataset; fully determined by the config."""
    n_planted = int(round(cfg.n_series * cfg.effect_fraction))
    series_list, outcomes = [], {}
    for index in range(cfg.n_series):
        # Spread planted records evenly so train/test splits stay balanced.
        planted = (
            (index + 1) * n_planted // cfg.n_series
            > index * n_planted // cfg.n_series
        )
        series, record = _generate_one(cfg, index, planted)
        series_list.append(series)
        outcomes[record.id] = record
    return LabeledDataset(series_list, outcomes)


def write_synthetic(cfg: SynthConfig, out_dir) -> Path:
    """Generate and write the dataset; returns the manifest path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    data = generate_synthetic(cfg)
    series_files = {}
    for series in data.series:
        rel = f"{series.id}.txt"
        write_series_file(out_dir / rel, series)
        series_files[series.id] = rel
    records = [data.outcomes[s.id] for s in data.series]
    manifest = out_dir / "manifest.csv"
    write_manifest(manifest, records, series_files)
    return manifest

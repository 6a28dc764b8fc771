"""Dataset manifests and series-file I/O.

A dataset on disk is a comma-separated manifest plus one plain-text series
file per record (one sample per line, the literal token ``nan`` marking a
missing sample). The manifest header is fixed:

    id,series_file,cord_ph,compromise,split

``series_file`` paths are resolved relative to the manifest's directory;
``cord_ph`` may be empty when the outcome is unknown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DuplicateId, MissingFile, ParseError
from .series import DEFAULT_SAMPLE_RATE_HZ, TimeSeries

MANIFEST_HEADER = ["id", "series_file", "cord_ph", "compromise", "split"]
SPLITS = ("train", "test", "unassigned")
LOW_PH_CLASS_THRESHOLD = 7.1


@dataclass(frozen=True)
class OutcomeRecord:
    id: str
    cord_ph: float | None
    compromise: bool
    split: str

    def __post_init__(self):
        if self.split not in SPLITS:
            raise ValueError(f"split must be one of {SPLITS}, got {self.split!r}")
        if self.cord_ph is not None and not 6.5 < self.cord_ph < 8.0:
            raise ValueError(f"cord_ph {self.cord_ph} outside the plausible range (6.5, 8.0)")

    def low_ph_label(self, threshold: float = LOW_PH_CLASS_THRESHOLD) -> int | None:
        """1 for low pH (<= threshold), 0 for normal, None when unknown."""
        if self.cord_ph is None:
            return None
        return 1 if self.cord_ph <= threshold else 0


@dataclass
class LabeledDataset:
    series: list[TimeSeries]
    outcomes: dict[str, OutcomeRecord]

    def __post_init__(self):
        for s in self.series:
            if s.id not in self.outcomes:
                raise ValueError(f"no outcome record for series {s.id!r}")

    def outcome(self, series_id: str) -> OutcomeRecord:
        return self.outcomes[series_id]

    def subset(self, ids: list[str]) -> "LabeledDataset":
        index = {s.id: s for s in self.series}
        return LabeledDataset(
            [index[i] for i in ids], {i: self.outcomes[i] for i in ids}
        )


def read_series_file(path: Path, series_id: str,
                     sample_rate_hz: float = DEFAULT_SAMPLE_RATE_HZ) -> TimeSeries:
    values = []
    mask = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            token = raw.strip()
            if token == "":
                continue
            if token == "nan":
                values.append(float("nan"))
                mask.append(True)
                continue
            try:
                sample = float(token)
            except ValueError as exc:
                raise ParseError(
                    f"bad sample {token!r} in {path}", line=lineno
                ) from exc
            if not math.isfinite(sample):
                raise ParseError(
                    f"non-finite sample {token!r} in {path}; use 'nan' for missing",
                    line=lineno,
                )
            values.append(sample)
            mask.append(False)
    if not values:
        raise ParseError(f"series file {path} is empty", line=1)
    return TimeSeries(
        id=series_id,
        values=np.array(values, dtype=float),
        missing_mask=np.array(mask, dtype=bool),
        sample_rate_hz=sample_rate_hz,
    )


def write_series_file(path: Path, series: TimeSeries) -> None:
    lines = [
        "nan" if missing else repr(float(v))
        for v, missing in zip(series.values, series.missing_mask)
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _parse_bool(token: str, lineno: int, column: int) -> bool:
    lowered = token.strip().lower()
    if lowered in ("true", "1"):
        return True
    if lowered in ("false", "0"):
        return False
    raise ParseError(f"bad boolean {token!r}", line=lineno, column=column)


def ingest_dataset(manifest_path) -> LabeledDataset:
    """Load a manifest and every series file it references."""
    manifest_path = Path(manifest_path)
    if not manifest_path.exists():
        raise MissingFile(f"manifest not found: {manifest_path}")
    base = manifest_path.parent
    lines = manifest_path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ParseError("manifest is empty", line=1)
    header = [h.strip() for h in lines[0].split(",")]
    if header != MANIFEST_HEADER:
        raise ParseError(
            f"manifest header must be {','.join(MANIFEST_HEADER)!r}", line=1
        )

    series_list: list[TimeSeries] = []
    outcomes: dict[str, OutcomeRecord] = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        if raw.strip() == "":
            continue
        parts = raw.split(",")
        if len(parts) != len(MANIFEST_HEADER):
            raise ParseError(
                f"expected {len(MANIFEST_HEADER)} fields, found {len(parts)}",
                line=lineno,
            )
        sid, series_file, ph_token, compromise_token, split = (p.strip() for p in parts)
        if sid == "":
            raise ParseError("empty record id", line=lineno, column=1)
        if sid in outcomes:
            raise DuplicateId(f"record id {sid!r} appears twice (line {lineno})")
        if ph_token == "":
            cord_ph = None
        else:
            try:
                cord_ph = float(ph_token)
            except ValueError as exc:
                raise ParseError(f"bad cord_ph {ph_token!r}", line=lineno, column=3) from exc
        compromise = _parse_bool(compromise_token, lineno, 4)
        if split not in SPLITS:
            raise ParseError(f"bad split {split!r}", line=lineno, column=5)

        series_path = base / series_file
        if not series_path.exists():
            raise MissingFile(f"series file not found: {series_path}")
        try:
            record = OutcomeRecord(sid, cord_ph, compromise, split)
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from exc
        series_list.append(read_series_file(series_path, sid))
        outcomes[sid] = record

    return LabeledDataset(series_list, outcomes)


def write_manifest(path: Path, records: list[OutcomeRecord], series_files: dict[str, str]) -> None:
    """Write a manifest; ``series_files`` maps record id to a relative path."""
    lines = [",".join(MANIFEST_HEADER)]
    for rec in records:
        ph = "" if rec.cord_ph is None else repr(rec.cord_ph)
        lines.append(
            ",".join(
                [
                    rec.id,
                    series_files[rec.id],
                    ph,
                    "true" if rec.compromise else "false",
                    rec.split,
                ]
            )
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

"""Series-by-feature matrices of scalar results with special-value tracking.

Cells are stored as a float array plus a parallel tag array; a cell is
either a finite number or carries a special tag. The CSV form writes
finite cells as shortest round-trip floats and specials as the tokens
``Inf`` (NotFinite) and ``NaN`` (Degenerate), so files are diffable and
byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError, SpecialValuePresent
from .features.catalog import FeatureDescriptor
from .features.values import FeatureValue
from .series import TimeSeries
from .util import derive_seed


@dataclass
class FeatureMatrix:
    ids: list[str]
    names: list[str]
    cells: list[list[FeatureValue]]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.cells) != len(self.ids):
            raise ValueError("one cell row per series id required")
        for row in self.cells:
            if len(row) != len(self.names):
                raise ValueError("cell rows must match the column count")
        if len(set(self.names)) != len(self.names):
            raise ValueError("column names must be unique")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("row ids must be unique")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.ids), len(self.names)

    def cell(self, series_id: str, name: str) -> FeatureValue:
        return self.cells[self.ids.index(series_id)][self.names.index(name)]

    def column(self, name: str) -> list[FeatureValue]:
        j = self.names.index(name)
        return [row[j] for row in self.cells]

    def column_values(self, name: str) -> np.ndarray:
        """Finite values of one column; raises if any cell is special."""
        col = self.column(name)
        if any(v.is_special for v in col):
            raise SpecialValuePresent(f"column {name!r} contains special values")
        return np.array([v.value for v in col], dtype=float)

    def column_has_special(self, name: str) -> bool:
        return any(v.is_special for v in self.column(name))

    def restrict_rows(self, ids: list[str]) -> "FeatureMatrix":
        index = {sid: i for i, sid in enumerate(self.ids)}
        rows = [self.cells[index[sid]] for sid in ids]
        return FeatureMatrix(list(ids), list(self.names), rows, dict(self.provenance))

    def restrict_columns(self, names: list[str]) -> "FeatureMatrix":
        cols = [self.names.index(n) for n in names]
        rows = [[row[j] for j in cols] for row in self.cells]
        return FeatureMatrix(list(self.ids), list(names), rows, dict(self.provenance))

    def to_csv_text(self) -> str:
        lines = [",".join(["id"] + self.names)]
        for sid, row in zip(self.ids, self.cells):
            lines.append(",".join([sid] + [v.to_token() for v in row]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv_text(cls, text: str, provenance: dict | None = None) -> "FeatureMatrix":
        lines = [ln for ln in text.split("\n") if ln != ""]
        if not lines:
            raise ParseError("empty feature matrix file", line=1)
        header = lines[0].split(",")
        if header[:1] != ["id"]:
            raise ParseError("feature matrix header must start with 'id'", line=1, column=1)
        names = header[1:]
        ids, cells = [], []
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split(",")
            if len(parts) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, found {len(parts)}", line=lineno
                )
            ids.append(parts[0])
            row = []
            for col, token in enumerate(parts[1:], start=2):
                try:
                    row.append(FeatureValue.from_token(token))
                except ValueError as exc:
                    raise ParseError(str(exc), line=lineno, column=col) from exc
            cells.append(row)
        return cls(ids, names, cells, provenance or {})


def cell_seed(seed: int, series_id: str, feature_name: str) -> int:
    """The per-cell evaluation seed; depends only on its three inputs."""
    return derive_seed(seed, series_id, feature_name)


def build_feature_matrix(
    series_list: list[TimeSeries],
    catalog: list[FeatureDescriptor],
    seed: int = 0,
) -> FeatureMatrix:
    """Evaluate every catalog feature on every series.

    Each cell gets its own seed derived from (seed, series id, feature name),
    so the matrix does not depend on evaluation order and single cells can be
    recomputed in isolation.
    """
    ids = [s.id for s in series_list]
    names = [d.name for d in catalog]
    cells = []
    for s in series_list:
        row = [d.evaluate(s, seed=cell_seed(seed, s.id, d.name)) for d in catalog]
        cells.append(row)
    provenance = {
        "seed": seed,
        "catalog": [{"name": d.name, "params": dict(d.params)} for d in catalog],
    }
    return FeatureMatrix(ids, names, cells, provenance)


def filter_special_features(m: FeatureMatrix) -> FeatureMatrix:
    """Drop every column that produced a special value at least once."""
    keep = [name for name in m.names if not m.column_has_special(name)]
    return m.restrict_columns(keep)

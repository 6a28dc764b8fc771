"""Scalar feature results: a finite number, or a tagged special value.

Every catalog feature maps a series to exactly one of these. Special values
mark algorithms that do not apply to a given record (constant input, fits
that cannot converge, statistics that come out non-finite); downstream, any
column that produced a special value anywhere is excluded from analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

NOT_FINITE = "NotFinite"
DEGENERATE = "Degenerate"
_TAGS = (NOT_FINITE, DEGENERATE)

# Tokens used when a matrix is written to / read from CSV.
_SPECIAL_TOKENS = {NOT_FINITE: "Inf", DEGENERATE: "NaN"}
_TOKEN_SPECIALS = {"Inf": NOT_FINITE, "-Inf": NOT_FINITE, "NaN": DEGENERATE}


@dataclass(frozen=True)
class FeatureValue:
    value: float | None = None
    special: str | None = None

    def __post_init__(self):
        if (self.value is None) == (self.special is None):
            raise ValueError("exactly one of value/special must be set")
        if self.special is not None and self.special not in _TAGS:
            raise ValueError(f"unknown special tag {self.special!r}")
        if self.value is not None:
            object.__setattr__(self, "value", float(self.value))
            if not math.isfinite(self.value):
                raise ValueError("finite variant must hold a finite number")

    @classmethod
    def of(cls, value: float) -> "FeatureValue":
        """Wrap a computed number, demoting non-finite results to NotFinite."""
        if math.isfinite(value):
            return cls(value=float(value))
        return cls(special=NOT_FINITE)

    @classmethod
    def not_finite(cls) -> "FeatureValue":
        return cls(special=NOT_FINITE)

    @classmethod
    def degenerate(cls) -> "FeatureValue":
        return cls(special=DEGENERATE)

    @property
    def is_special(self) -> bool:
        return self.special is not None

    def unwrap(self) -> float:
        if self.is_special:
            raise ValueError(f"special feature value: {self.special}")
        return self.value

    def to_token(self) -> str:
        """CSV token: repr of the float, or Inf / NaN for specials."""
        if self.is_special:
            return _SPECIAL_TOKENS[self.special]
        return repr(self.value)

    @classmethod
    def from_token(cls, token: str) -> "FeatureValue":
        if token in _TOKEN_SPECIALS:
            return cls(special=_TOKEN_SPECIALS[token])
        return cls(value=float(token))

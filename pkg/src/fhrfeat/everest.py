"""Event-rate-by-group analysis.

Patients are ordered by a feature value and split into equally populated
contiguous groups; each outcome definition then gets a per-group event
proportion. A feature is informative when the rates climb (or fall) across
groups instead of staying flat at the cohort prevalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import SpecialValuePresent, TooFewPatients


@dataclass(frozen=True)
class OutcomeDefinition:
    """A named boolean predicate over per-patient outcome records."""

    name: str
    predicate: Callable[[object], bool]


def standard_outcomes(ph_threshold: float = 7.05) -> list[OutcomeDefinition]:
    """Low pH, reported compromise, and their conjunction."""

    def low_ph(rec) -> bool:
        return rec.cord_ph is not None and rec.cord_ph <= ph_threshold

    return [
        OutcomeDefinition("low_ph", low_ph),
        OutcomeDefinition("compromised", lambda rec: bool(rec.compromise)),
        OutcomeDefinition(
            "low_ph_and_compromised",
            lambda rec: low_ph(rec) and bool(rec.compromise),
        ),
    ]


@dataclass(frozen=True)
class EverestResult:
    feature_name: str
    n_group: int
    group_boundaries: tuple  # n_group - 1 cut values, in feature units
    group_sizes: tuple
    group_rates: dict  # outcome name -> tuple of n_group rates
    overall_rates: dict  # outcome name -> cohort prevalence

    def to_dict(self) -> dict:
        return {
            "feature_name": self.feature_name,
            "n_group": self.n_group,
            "group_boundaries": list(self.group_boundaries),
            "group_sizes": list(self.group_sizes),
            "group_rates": {k: list(v) for k, v in self.group_rates.items()},
            "overall_rates": dict(self.overall_rates),
        }


def _group_sizes(n: int, n_group: int) -> list[int]:
    base, extra = divmod(n, n_group)
    return [base + 1 if g < extra else base for g in range(n_group)]


def everest(
    values,
    patient_ids,
    outcomes,
    defs: list[OutcomeDefinition],
    n_group: int = 10,
    feature_name: str = "",
) -> EverestResult:
    """Per-group event rates for patients ordered by a feature value.

    Patients are sorted ascending by (value, patient id) and split into
    ``n_group`` contiguous groups whose sizes differ by at most one, larger
    groups first. Boundaries are the midpoints between the extreme values of
    neighbouring groups. The size-weighted mean of the group rates equals
    the overall prevalence by construction.
    """
    if n_group < 2:
        raise ValueError("n_group must be >= 2")
    values = [float(v) for v in values]
    if not all(math.isfinite(v) for v in values):
        raise SpecialValuePresent("feature values must be finite for event-rate grouping")
    n = len(values)
    if not (n == len(patient_ids) == len(outcomes)):
        raise ValueError("values, patient_ids and outcomes must align")
    if n < n_group:
        raise TooFewPatients(f"need at least {n_group} patients, got {n}")

    order = sorted(range(n), key=lambda i: (values[i], str(patient_ids[i])))
    sizes = _group_sizes(n, n_group)

    groups = []
    start = 0
    for size in sizes:
        groups.append(order[start : start + size])
        start += size

    boundaries = tuple(
        (values[groups[g][-1]] + values[groups[g + 1][0]]) / 2.0
        for g in range(n_group - 1)
    )

    group_rates = {}
    overall_rates = {}
    for d in defs:
        flags = [bool(d.predicate(outcomes[i])) for i in range(n)]
        rates = tuple(
            sum(flags[i] for i in group) / len(group) for group in groups
        )
        group_rates[d.name] = rates
        overall_rates[d.name] = sum(flags) / n

    return EverestResult(
        feature_name=feature_name,
        n_group=n_group,
        group_boundaries=boundaries,
        group_sizes=tuple(sizes),
        group_rates=group_rates,
        overall_rates=overall_rates,
    )


def top_group_risk_ratio(result: EverestResult, outcome: str) -> float:
    """Last-group event rate over the cohort prevalence.

    NaN (not finite) when the cohort has no events at all.
    """
    overall = result.overall_rates[outcome]
    if overall == 0.0:
        return float("nan")
    return result.group_rates[outcome][-1] / overall

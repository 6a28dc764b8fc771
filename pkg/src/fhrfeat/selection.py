"""Feature selection: rate/significance screening, redundancy clustering,
and correlation ranking against a continuous target.

The classification route screens every feature by its threshold
misclassification rate, keeps the ones whose permutation p-value survives a
Benjamini-Hochberg cut, clusters the survivors on 1 - |R| distances, and
picks the best-scoring member of each cluster. The regression route simply
orders features by |Pearson R| against the target with a shuffle-based
significance for each.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classify import fit_threshold_classifier, misclassification_rate, permutation_pvalue
from .cluster import Dendrogram, auto_cluster_count, average_linkage, cut_tree, select_representatives
from .errors import DegenerateColumn, SpecialValuePresent
from .matrix import FeatureMatrix
from .util import as_binary_labels, as_finite_array, derive_seed

STATUS_OK = "ok"
STATUS_EMPTY_SELECTION = "empty_selection"


def pearson_r(values, target) -> float:
    """Pearson correlation coefficient between two equal-length sequences."""
    x = as_finite_array(values, "values")
    y = as_finite_array(target, "target")
    if len(x) != len(y):
        raise ValueError("values and target must have equal length")
    if len(x) < 2:
        raise ValueError("need at least two points")
    xd = x - x.mean()
    yd = y - y.mean()
    denom = float(np.sqrt(np.dot(xd, xd) * np.dot(yd, yd)))
    if denom == 0.0:
        raise DegenerateColumn("correlation undefined for a constant sequence")
    r = float(np.dot(xd, yd) / denom)
    return min(1.0, max(-1.0, r))


def bh_fdr_select(pvalues: dict, q: float) -> list[str]:
    """Benjamini-Hochberg selection at false discovery rate q.

    Sorts the p-values ascending and keeps everything up to the largest rank
    k with p_(k) <= k q / m. Returns the selected names in ascending p-value
    order (ties broken by name).
    """
    if not 0 < q:
        raise ValueError("q must be positive")
    items = sorted(pvalues.items(), key=lambda kv: (kv[1], kv[0]))
    m = len(items)
    cutoff = 0
    for rank, (_, p) in enumerate(items, start=1):
        if p <= rank * q / m:
            cutoff = rank
    return [name for name, _ in items[:cutoff]]


def abs_corr_matrix(m: FeatureMatrix, features: list[str]) -> np.ndarray:
    """Symmetric |Pearson R| matrix between feature columns, unit diagonal."""
    columns = [m.column_values(name) for name in features]
    k = len(features)
    out = np.eye(k)
    for i in range(k):
        for j in range(i + 1, k):
            r = abs(pearson_r(columns[i], columns[j]))
            out[i, j] = out[j, i] = r
    return out


@dataclass(frozen=True)
class RegressionRanking:
    name: str
    r: float
    p_value: float


def rank_by_regression(
    m: FeatureMatrix, target, n_perm: int = 1000, seed: int = 0
) -> list[RegressionRanking]:
    """Order features by |Pearson R| against a per-row target.

    Each feature's p-value comes from ``n_perm`` seeded target shuffles,
    counting shuffles whose |R| reaches the observed one. Per-feature shuffle
    seeds derive from (seed, feature name), so the ranking is reproducible
    and independent of column order.
    """
    y = as_finite_array(target, "target")
    if len(y) != len(m.ids):
        raise ValueError("target must have one entry per matrix row")
    rankings = []
    for name in m.names:
        x = m.column_values(name)
        observed = pearson_r(x, y)
        rng = np.random.default_rng(derive_seed(seed, name))
        hits = 0
        for _ in range(n_perm):
            if abs(pearson_r(x, rng.permutation(y))) >= abs(observed):
                hits += 1
        rankings.append(RegressionRanking(name, observed, (1 + hits) / (n_perm + 1)))
    rankings.sort(key=lambda r: (-abs(r.r), r.name))
    return rankings


@dataclass
class SelectionReport:
    """Everything the classification-selection pipeline decided and why."""

    status: str
    rates: dict
    p_values: dict
    selected: list[str]
    dendrogram: Dendrogram | None
    clusters: list[list[str]]
    representatives: list[str]
    n_clusters: int
    fdr_q: float
    n_perm: int
    seed: int
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        merges = (
            [[a, b, h] for a, b, h in self.dendrogram.merges]
            if self.dendrogram is not None
            else []
        )
        leaf_names = list(self.dendrogram.leaf_names) if self.dendrogram else []
        return {
            "schema_version": 1,
            "status": self.status,
            "rates": self.rates,
            "p_values": self.p_values,
            "selected": self.selected,
            "dendrogram": {"leaf_names": leaf_names, "merges": merges},
            "clusters": self.clusters,
            "representatives": self.representatives,
            "n_clusters": self.n_clusters,
            "fdr_q": self.fdr_q,
            "n_perm": self.n_perm,
            "seed": self.seed,
            "provenance": self.provenance,
        }


def run_classification_selection(
    m: FeatureMatrix,
    labels,
    q: float = 0.001,
    k: int | str = "auto",
    n_perm: int = 1000,
    seed: int = 0,
) -> SelectionReport:
    """Screen, cluster and summarise features for a binary outcome.

    Stages, in order: per-feature threshold misclassification rates;
    permutation p-values (per-feature seeds derived from ``seed`` and the
    feature name); Benjamini-Hochberg selection at rate ``q``; |R| matrix
    over the selected features; average-linkage clustering of 1 - |R|
    distances; a cut into ``k`` clusters (``"auto"`` cuts at the largest
    merge-height gap); and the lowest-rate member of each cluster as its
    representative. Columns containing special values must be filtered out
    beforehand.
    """
    if not 0 < q:
        raise ValueError("q must be positive")
    if isinstance(k, str) and k != "auto":
        raise ValueError("k must be an integer or 'auto'")
    y = as_binary_labels(labels)
    if len(y) != len(m.ids):
        raise ValueError("labels must have one entry per matrix row")
    for name in m.names:
        if m.column_has_special(name):
            raise SpecialValuePresent(
                f"column {name!r} has special values; run filter_special_features first"
            )

    rates, p_values = {}, {}
    for name in m.names:
        x = m.column_values(name)
        clf = fit_threshold_classifier(x, y, feature_name=name)
        rates[name] = misclassification_rate(clf, x, y)
        p_values[name] = permutation_pvalue(
            x, y, n_perm=n_perm, seed=derive_seed(seed, name)
        )

    selected = bh_fdr_select(p_values, q)
    if not selected:
        return SelectionReport(
            status=STATUS_EMPTY_SELECTION,
            rates=rates,
            p_values=p_values,
            selected=[],
            dendrogram=None,
            clusters=[],
            representatives=[],
            n_clusters=0,
            fdr_q=q,
            n_perm=n_perm,
            seed=seed,
            provenance=dict(m.provenance),
        )

    # Keep matrix column order for the clustering stage so leaf indices are
    # stable regardless of p-value ties.
    selected_in_order = [n for n in m.names if n in set(selected)]
    corr = abs_corr_matrix(m, selected_in_order)
    dendrogram = average_linkage(1.0 - corr, leaf_names=selected_in_order)
    n_clusters = auto_cluster_count(dendrogram) if k == "auto" else int(k)
    n_clusters = max(1, min(n_clusters, len(selected_in_order)))
    clusters = cut_tree(dendrogram, n_clusters)
    representatives = select_representatives(clusters, rates)

    return SelectionReport(
        status=STATUS_OK,
        rates=rates,
        p_values=p_values,
        selected=selected_in_order,
        dendrogram=dendrogram,
        clusters=clusters,
        representatives=representatives,
        n_clusters=n_clusters,
        fdr_q=q,
        n_perm=n_perm,
        seed=seed,
        provenance=dict(m.provenance),
    )

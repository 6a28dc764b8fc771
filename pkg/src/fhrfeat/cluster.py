"""Average-linkage agglomeration, tree cutting and representative picking.

The merge height between two clusters is the plain mean of all leaf-pair
distances between them, summed in sorted leaf order, so an O(n^3) replay
with the same arithmetic reproduces the heights bit for bit. Cluster ids
follow the usual convention: leaves are 0..n-1 and the k-th merge creates
id n+k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Dendrogram:
    """Merge list from agglomerative clustering.

    ``merges[k] = (id_a, id_b, height)`` with id_a < id_b; heights are
    non-decreasing and there are exactly ``len(leaf_names) - 1`` merges.
    """

    leaf_names: tuple
    merges: tuple

    def __post_init__(self):
        n = len(self.leaf_names)
        if len(self.merges) != max(n - 1, 0):
            raise ValueError("a dendrogram over n leaves needs n-1 merges")
        heights = [h for _, _, h in self.merges]
        if any(b < a for a, b in zip(heights, heights[1:])):
            raise ValueError("merge heights must be non-decreasing")

    @property
    def heights(self) -> list[float]:
        return [h for _, _, h in self.merges]


def _check_distance_matrix(dist) -> np.ndarray:
    d = np.asarray(dist, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("distance matrix must be square")
    if not np.all(np.isfinite(d)):
        raise ValueError("distance matrix must be finite")
    if not np.array_equal(d, d.T):
        raise ValueError("distance matrix must be symmetric")
    if np.any(d < 0):
        raise ValueError("distances must be non-negative")
    return d


def _mean_leaf_pair_distance(d: np.ndarray, leaves_a, leaves_b) -> float:
    total = 0.0
    for i in leaves_a:
        for j in leaves_b:
            total += d[i, j]
    return total / (len(leaves_a) * len(leaves_b))


def average_linkage(dist, leaf_names=None) -> Dendrogram:
    """Agglomerate by smallest mean inter-cluster distance.

    Every round merges the active cluster pair with the minimal mean
    leaf-pair distance, recording that mean as the merge height. Ties go to
    the pair with the lowest (first id, second id).
    """
    d = _check_distance_matrix(dist)
    n = d.shape[0]
    if leaf_names is None:
        leaf_names = tuple(str(i) for i in range(n))
    else:
        leaf_names = tuple(leaf_names)
        if len(leaf_names) != n:
            raise ValueError("leaf_names must match the matrix size")

    active: dict[int, tuple[int, ...]] = {
        i: (i,) for i in range(n)
    }  # cluster id -> sorted leaf indices
    merges = []
    next_id = n
    while len(active) > 1:
        best = None
        ids = sorted(active)
        for ai in range(len(ids)):
            for bi in range(ai + 1, len(ids)):
                a, b = ids[ai], ids[bi]
                h = _mean_leaf_pair_distance(d, active[a], active[b])
                if best is None or h < best[0]:
                    best = (h, a, b)
        h, a, b = best
        merges.append((a, b, h))
        active[next_id] = tuple(sorted(active.pop(a) + active.pop(b)))
        next_id += 1
    return Dendrogram(leaf_names, tuple(merges))


def cut_tree(dendrogram: Dendrogram, k: int) -> list[list[str]]:
    """Partition the leaves into exactly k clusters by undoing the last
    k-1 merges.

    Clusters are reported as sorted name lists, ordered by their smallest
    leaf index, so cut_tree(k) refines cut_tree(k-1) deterministically.
    """
    n = len(dendrogram.leaf_names)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    members = {i: [i] for i in range(n)}
    next_id = n
    for a, b, _ in dendrogram.merges[: n - k]:
        members[next_id] = members.pop(a) + members.pop(b)
        next_id += 1
    clusters = sorted(members.values(), key=min)
    return [[dendrogram.leaf_names[i] for i in sorted(group)] for group in clusters]


def auto_cluster_count(dendrogram: Dendrogram) -> int:
    """Cluster count from the largest gap between consecutive merge heights.

    Cutting just below merge i+1 leaves n - (i + 1) clusters; the cut point
    is the first largest gap. Trees with fewer than 3 leaves keep every leaf
    separate.
    """
    heights = dendrogram.heights
    n = len(dendrogram.leaf_names)
    if n <= 2:
        return n
    gaps = np.diff(heights)
    if len(gaps) == 0:
        return n
    split = int(np.argmax(gaps))  # first occurrence of the widest gap
    return n - (split + 1)


def select_representatives(clusters: list[list[str]], scores: dict) -> list[str]:
    """One name per cluster: lowest score, ties to the smaller name."""
    picks = []
    for group in clusters:
        if not group:
            raise ValueError("clusters must be non-empty")
        picks.append(min(group, key=lambda name: (scores[name], name)))
    return picks

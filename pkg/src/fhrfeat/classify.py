"""One-dimensional threshold classification and its permutation null.

With one feature, equal class priors and pooled variance, a linear
discriminant reduces to thresholding at the midpoint of the two class
means; that is the entire model. Significance of a feature's
misclassification rate comes from refitting under label shuffles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MissingClass
from .util import as_binary_labels, as_finite_array

POSITIVE_ABOVE = "above"
POSITIVE_BELOW = "below"


@dataclass(frozen=True)
class ThresholdClassifier:
    threshold: float
    positive_side: str
    trained_on: str = ""

    def __post_init__(self):
        if not np.isfinite(self.threshold):
            raise ValueError("threshold must be finite")
        if self.positive_side not in (POSITIVE_ABOVE, POSITIVE_BELOW):
            raise ValueError(f"unknown positive_side {self.positive_side!r}")

    def predict(self, values) -> np.ndarray:
        v = as_finite_array(values)
        if self.positive_side == POSITIVE_ABOVE:
            return (v >= self.threshold).astype(int)
        return (v <= self.threshold).astype(int)


def fit_threshold_classifier(values, labels, feature_name: str = "") -> ThresholdClassifier:
    """Threshold at the midpoint of the class means.

    The positive side faces the class-1 mean; when the means tie, the
    threshold sits at the common mean with the positive side above.
    """
    v = as_finite_array(values)
    y = as_binary_labels(labels)
    if len(v) != len(y):
        raise ValueError("values and labels must have equal length")
    if not np.any(y == 0) or not np.any(y == 1):
        raise MissingClass("both classes must be present to fit a threshold")
    mean0 = float(v[y == 0].mean())
    mean1 = float(v[y == 1].mean())
    side = POSITIVE_ABOVE if mean1 >= mean0 else POSITIVE_BELOW
    return ThresholdClassifier((mean0 + mean1) / 2.0, side, feature_name)


def misclassification_rate(clf: ThresholdClassifier, values, labels) -> float:
    """Fraction of samples predicted into the wrong class.

    Samples sitting exactly on the threshold count as predictions for the
    positive side.
    """
    y = as_binary_labels(labels)
    pred = clf.predict(values)
    return float(np.mean(pred != y))


def permutation_pvalue(values, labels, n_perm: int = 1000, seed: int = 0) -> float:
    """Permutation p-value for a feature's in-sample misclassification rate.

    Refits the threshold and rescores under ``n_perm`` seeded label shuffles;
    p = (1 + #{shuffled rate <= observed rate}) / (n_perm + 1).
    """
    if n_perm < 1:
        raise ValueError("n_perm must be >= 1")
    v = as_finite_array(values)
    y = as_binary_labels(labels)
    observed = misclassification_rate(fit_threshold_classifier(v, y), v, y)
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(n_perm):
        shuffled = rng.permutation(y)
        rate = misclassification_rate(fit_threshold_classifier(v, shuffled), v, shuffled)
        if rate <= observed:
            hits += 1
    return (1 + hits) / (n_perm + 1)

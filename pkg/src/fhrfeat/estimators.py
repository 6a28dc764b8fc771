"""Estimator-style wrappers so the pipeline composes with scikit-learn.

The functional modules stay the source of truth; these classes adapt the
transform-shaped stages (preprocessing, catalog extraction) and the
fit-shaped stages (threshold classification, feature selection) to the
fit/transform/predict protocol, including get_params/set_params via
``sklearn.base.BaseEstimator`` so cloning and grid search work.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from .classify import fit_threshold_classifier, misclassification_rate
from .features.catalog import default_catalog
from .matrix import FeatureMatrix, build_feature_matrix, filter_special_features
from .selection import run_classification_selection
from .series import PreprocessConfig, Rejected, TimeSeries, preprocess
from .util import as_binary_labels


class SeriesPreprocessor(BaseEstimator, TransformerMixin):
    """Gap interpolation plus trim-and-filter over a list of series.

    Stateless; ``transform`` returns the preprocessed series and records the
    dropped ones on ``rejected_``.
    """

    def __init__(self, max_interp_gap_samples=60, max_missing_fraction=0.2):
        self.max_interp_gap_samples = max_interp_gap_samples
        self.max_missing_fraction = max_missing_fraction

    def fit(self, X, y=None):
        return self

    def transform(self, X) -> list[TimeSeries]:
        cfg = PreprocessConfig(
            max_interp_gap_samples=self.max_interp_gap_samples,
            max_missing_fraction=self.max_missing_fraction,
        )
        kept, rejected = [], []
        for series in X:
            result = preprocess(series, cfg)
            if isinstance(result, Rejected):
                rejected.append(result)
            else:
                kept.append(result)
        self.rejected_ = rejected
        return kept


class CatalogFeatureExtractor(BaseEstimator, TransformerMixin):
    """Evaluate a feature catalog over a list of preprocessed series.

    ``transform`` returns a :class:`FeatureMatrix`; use ``feature_names_``
    for the column contract.
    """

    def __init__(self, catalog=None, seed=0):
        self.catalog = catalog
        self.seed = seed

    def fit(self, X, y=None):
        return self

    def transform(self, X) -> FeatureMatrix:
        catalog = self.catalog if self.catalog is not None else default_catalog()
        matrix = build_feature_matrix(list(X), catalog, seed=self.seed)
        self.feature_names_ = list(matrix.names)
        return matrix


class ThresholdBinaryClassifier(BaseEstimator, ClassifierMixin):
    """Midpoint-of-class-means threshold rule on a single feature."""

    def __init__(self, feature_name=""):
        self.feature_name = feature_name

    @staticmethod
    def _as_column(X) -> np.ndarray:
        arr = np.asarray(X, dtype=float)
        if arr.ndim == 2:
            if arr.shape[1] != 1:
                raise ValueError("this classifier handles exactly one feature")
            arr = arr[:, 0]
        if arr.ndim != 1:
            raise ValueError("X must be a vector or a single-column matrix")
        return arr

    def fit(self, X, y):
        values = self._as_column(X)
        labels = as_binary_labels(y)
        clf = fit_threshold_classifier(values, labels, feature_name=self.feature_name)
        self.threshold_ = clf.threshold
        self.positive_side_ = clf.positive_side
        self.classes_ = np.array([0, 1])
        self._clf = clf
        return self

    def predict(self, X) -> np.ndarray:
        return self._clf.predict(self._as_column(X))

    def misclassification_rate(self, X, y) -> float:
        return misclassification_rate(self._clf, self._as_column(X), as_binary_labels(y))


class FdrFeatureSelector(BaseEstimator):
    """Rate screening, FDR cut, clustering and representative picking.

    ``fit`` takes a special-value-free :class:`FeatureMatrix` and binary
    labels; ``transform`` restricts any matrix to the representative columns.
    """

    def __init__(self, q=0.001, k="auto", n_perm=1000, seed=0):
        self.q = q
        self.k = k
        self.n_perm = n_perm
        self.seed = seed

    def fit(self, X: FeatureMatrix, y):
        matrix = filter_special_features(X)
        self.report_ = run_classification_selection(
            matrix, y, q=self.q, k=self.k, n_perm=self.n_perm, seed=self.seed
        )
        self.selected_features_ = list(self.report_.selected)
        self.representatives_ = list(self.report_.representatives)
        return self

    def transform(self, X: FeatureMatrix) -> FeatureMatrix:
        return X.restrict_columns(self.representatives_)

    def fit_transform(self, X: FeatureMatrix, y) -> FeatureMatrix:
        return self.fit(X, y).transform(X)

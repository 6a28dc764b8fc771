import numpy as np
import pytest

from fhrfeat import fit_threshold_classifier, misclassification_rate, permutation_pvalue
from fhrfeat.classify import POSITIVE_ABOVE
from fhrfeat.errors import MissingClass


class TestFitThresholdClassifier:
    def test_midpoint_of_class_means(self):
        clf = fit_threshold_classifier([0, 1, 2, 3], [0, 0, 1, 1])
        assert clf.threshold == 1.5
        assert clf.positive_side == POSITIVE_ABOVE

    def test_interleaved_classes_still_midpoint(self):
        clf = fit_threshold_classifier([0, 2, 1, 3], [0, 0, 1, 1])
        assert clf.threshold == 1.5

    def test_tied_means(self):
        clf = fit_threshold_classifier([5.0, 5.0], [0, 1])
        assert clf.threshold == 5.0
        assert clf.positive_side == POSITIVE_ABOVE

    def test_positive_side_follows_larger_mean(self):
        clf = fit_threshold_classifier([3, 4, 0, 1], [0, 0, 1, 1])
        assert clf.positive_side == "below"

    def test_missing_class(self):
        with pytest.raises(MissingClass):
            fit_threshold_classifier([1.0, 2.0], [1, 1])


class TestMisclassificationRate:
    def test_perfect_separation(self):
        values, labels = [0, 1, 2, 3], [0, 0, 1, 1]
        clf = fit_threshold_classifier(values, labels)
        assert misclassification_rate(clf, values, labels) == 0.0

    def test_inverted_labels_complement(self):
        values, labels = [0, 1, 2, 3], [0, 0, 1, 1]
        clf = fit_threshold_classifier(values, labels)
        flipped = [1, 1, 0, 0]
        assert misclassification_rate(clf, values, flipped) == 1.0

    def test_interleaved_is_half(self):
        values, labels = [0, 2, 1, 3], [0, 0, 1, 1]
        clf = fit_threshold_classifier(values, labels)
        assert misclassification_rate(clf, values, labels) == 0.5

    def test_sample_at_threshold_counts_positive(self):
        clf = fit_threshold_classifier([0.0, 3.0], [0, 1])  # threshold 1.5
        assert clf.predict([1.5]).tolist() == [1]

    def test_affine_invariance(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            values = rng.standard_normal(60)
            labels = rng.integers(0, 2, size=60)
            if labels.min() == labels.max():
                labels[0] = 1 - labels[0]
            scale = rng.uniform(0.1, 5.0)
            shift = rng.uniform(-10, 10)
            transformed = scale * values + shift
            base = misclassification_rate(
                fit_threshold_classifier(values, labels), values, labels
            )
            moved = misclassification_rate(
                fit_threshold_classifier(transformed, labels), transformed, labels
            )
            assert moved == pytest.approx(base, abs=1e-12)


class TestPermutationPvalue:
    def test_perfect_separation_minimal_p(self):
        rng = np.random.default_rng(0)
        values = np.concatenate([rng.normal(0, 0.1, 20), rng.normal(10, 0.1, 20)])
        labels = np.array([0] * 20 + [1] * 20)
        assert permutation_pvalue(values, labels, n_perm=999, seed=1) == pytest.approx(1 / 1000)

    def test_null_is_roughly_uniform(self):
        rng = np.random.default_rng(7)
        ok = 0
        for trial in range(100):
            values = rng.standard_normal(50)
            labels = rng.permutation([0] * 25 + [1] * 25)
            p = permutation_pvalue(values, labels, n_perm=99, seed=trial)
            if p > 0.01:
                ok += 1
        assert ok >= 95

    def test_chance_rate_gives_large_p(self):
        values = np.array([0.0, 2.0, 1.0, 3.0] * 10)
        labels = np.array([0, 0, 1, 1] * 10)
        p = permutation_pvalue(values, labels, n_perm=200, seed=5)
        assert p > 0.5

    def test_deterministic_in_seed(self):
        rng = np.random.default_rng(9)
        values = rng.standard_normal(40)
        labels = rng.integers(0, 2, 40)
        labels[0] = 0
        labels[1] = 1
        assert permutation_pvalue(values, labels, 100, seed=4) == permutation_pvalue(
            values, labels, 100, seed=4
        )

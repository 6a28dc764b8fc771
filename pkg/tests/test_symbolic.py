import numpy as np
import pytest

from fhrfeat import TimeSeries
from fhrfeat.errors import DegenerateSeries
from fhrfeat.features import (
    min_eigenvalue,
    symbolize_equiprobable,
    transition_matrix,
    transition_mineig_decay_r2,
)
from fhrfeat.features.fitting import fit_exp_decay
from helpers import random_series


class TestSymbolizeEquiprobable:
    def test_median_split(self):
        ts = TimeSeries("x", np.array([3.0, 1.0, 2.0, 4.0]))
        assert symbolize_equiprobable(ts, 2).tolist() == [1, 0, 0, 1]

    def test_rank_order(self):
        ts = TimeSeries("x", np.array([1.0, 2.0, 3.0, 4.0]))
        assert symbolize_equiprobable(ts, 4).tolist() == [0, 1, 2, 3]

    def test_constant_degenerate(self):
        with pytest.raises(DegenerateSeries):
            symbolize_equiprobable(TimeSeries("c", np.full(10, 1.0)), 2)

    def test_too_few_distinct_values(self):
        with pytest.raises(DegenerateSeries):
            symbolize_equiprobable(TimeSeries("x", np.array([1.0, 2.0, 1.0, 2.0])), 3)

    def test_every_symbol_used_and_counts_balanced(self):
        for seed in range(5):
            ts = random_series(seed, n=237)
            for alphabet in (2, 3, 5, 10):
                symbols = symbolize_equiprobable(ts, alphabet)
                counts = np.bincount(symbols, minlength=alphabet)
                assert counts.min() >= 1
                assert counts.max() - counts.min() <= 1


class TestTransitionMatrix:
    def test_alternating(self):
        got = transition_matrix([0, 1, 0, 1, 0], 2)
        np.testing.assert_allclose(got, [[0, 1], [1, 0]], atol=1e-12)

    def test_single_symbol_alphabet(self):
        np.testing.assert_allclose(transition_matrix([0, 0, 0], 1), [[1.0]])

    def test_blocky_sequence(self):
        got = transition_matrix([0, 0, 1, 1], 2)
        np.testing.assert_allclose(got, [[0.5, 0.5], [0.0, 1.0]], atol=1e-12)

    def test_unvisited_row_is_uniform(self):
        got = transition_matrix([0, 2, 0, 2], 3)  # symbol 1 never occurs
        np.testing.assert_allclose(got[1], [1 / 3, 1 / 3, 1 / 3])

    def test_rows_sum_to_one(self):
        rng = np.random.default_rng(2)
        for alphabet in (2, 4, 9):
            symbols = rng.integers(0, alphabet, size=500)
            got = transition_matrix(symbols, alphabet)
            np.testing.assert_allclose(got.sum(axis=1), np.ones(alphabet), atol=1e-12)


class TestMinEigenvalue:
    def test_identity(self):
        assert min_eigenvalue(np.eye(2)) == pytest.approx(1.0, abs=1e-12)

    def test_swap_matrix(self):
        assert min_eigenvalue([[0.0, 1.0], [1.0, 0.0]]) == pytest.approx(-1.0, abs=1e-12)

    def test_rank_one_stochastic(self):
        assert min_eigenvalue([[0.5, 0.5], [0.5, 0.5]]) == pytest.approx(0.0, abs=1e-12)

    def test_complex_spectrum_uses_real_part(self):
        # rotation-like: eigenvalues are +/- i, so the minimum real part is 0
        assert min_eigenvalue([[0.0, -1.0], [1.0, 0.0]]) == pytest.approx(0.0, abs=1e-12)


class TestTransitionMineigDecay:
    def test_matches_stage_by_stage_composition(self):
        ts = random_series(41, n=3000)
        got = transition_mineig_decay_r2(ts, max_alphabet=12)
        sizes = np.arange(2, 13, dtype=float)
        eigs = [
            min_eigenvalue(transition_matrix(symbolize_equiprobable(ts, n), n))
            for n in range(2, 13)
        ]
        _, _, expected = fit_exp_decay(sizes, eigs)
        assert got.value == pytest.approx(expected, abs=1e-12)

    def test_bounded_by_one(self):
        for seed in range(3):
            out = transition_mineig_decay_r2(random_series(seed, n=2000), max_alphabet=10)
            assert out.value <= 1.0 + 1e-9

    def test_deterministic(self):
        ts = random_series(43, n=2500)
        assert transition_mineig_decay_r2(ts) == transition_mineig_decay_r2(ts)

    def test_few_distinct_values_degenerate(self):
        ts = TimeSeries("d", np.tile(np.arange(5.0), 100))
        out = transition_mineig_decay_r2(ts, max_alphabet=40)
        assert out.special == "Degenerate"

"""The feature catalog: named series-to-scalar maps with fixed parameters.

Feature names are a stable public contract; they become feature-matrix
column headers and CLI arguments. The default catalog bundles the nine
analysis features together with a few elementary summaries (mean, spread,
short-lag autocorrelations) so selection runs always have a catalog worth
filtering and clustering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..correlation import autocorr
from ..errors import FhrfeatError, NumericalFailure
from ..series import TimeSeries
from .distribution import (
    exp_distribution_fit_rmse,
    mean_abs_dev_from_median,
    second_order_cv,
    trimmed_std_ratio,
)
from .entropy import (
    MEAN_APEN,
    STD_SAMPEN,
    EntropyParams,
    LocalWindowParams,
    local_entropy_spread,
)
from .symbolic import transition_mineig_decay_r2
from .temporal import embedding_area_ratio, trev_numerator
from .values import FeatureValue


@dataclass(frozen=True)
class FeatureDescriptor:
    """A named scalar map over preprocessed series.

    ``params`` fully determine behaviour together with the evaluation seed;
    two calls with the same series, params and seed return identical values.
    """

    name: str
    func: Callable[[TimeSeries, int], FeatureValue]
    params: dict = field(default_factory=dict)

    def evaluate(self, series: TimeSeries, seed: int = 0) -> FeatureValue:
        """Apply the map, turning domain errors into special values.

        Convergence failures surface as NotFinite, every other domain error
        (constant input, too few samples, ...) as Degenerate.
        """
        try:
            result = self.func(series, seed)
        except NumericalFailure:
            return FeatureValue.not_finite()
        except FhrfeatError:
            return FeatureValue.degenerate()
        if isinstance(result, FeatureValue):
            return result
        return FeatureValue.of(float(result))


def _spread_descriptor(name: str, stat: str) -> FeatureDescriptor:
    window = LocalWindowParams(window_len=200, n_windows=100, seed=0)
    entropy = EntropyParams(m=1, r_frac=0.2)

    def func(series, seed, _stat=stat):
        w = LocalWindowParams(
            window_len=window.window_len, n_windows=window.n_windows, seed=seed
        )
        return local_entropy_spread(series, w, entropy, stat=_stat)

    return FeatureDescriptor(
        name,
        func,
        params={
            "window_len": window.window_len,
            "n_windows": window.n_windows,
            "m": entropy.m,
            "r_frac": entropy.r_frac,
            "stat": stat,
        },
    )


def _series_stat(stat: Callable[[np.ndarray], float]):
    def func(series, seed):
        return FeatureValue.of(stat(series.complete_values()))

    return func


def _autocorr_descriptor(lag: int) -> FeatureDescriptor:
    def func(series, seed, _lag=lag):
        return FeatureValue.of(autocorr(series, _lag))

    return FeatureDescriptor(f"autocorr_{lag}", func, params={"lag": lag})


def default_catalog() -> list[FeatureDescriptor]:
    """The nine analysis features plus elementary helper features."""
    descriptors = [
        FeatureDescriptor(
            "CO_trev_mi_num",
            lambda s, seed: trev_numerator(s, max_lag=50, n_bins=10),
            params={"max_lag": 50, "n_bins": 10},
        ),
        FeatureDescriptor(
            "DN_OutlierTest2_std",
            lambda s, seed: trimmed_std_ratio(s, trim_fraction=0.02),
            params={"trim_fraction": 0.02},
        ),
        _spread_descriptor("SY_SpreadRandomLocal_200_meanapen1_02", MEAN_APEN),
        FeatureDescriptor(
            "ST_dyntrans40_1_mineigfexp_adjr2",
            lambda s, seed: transition_mineig_decay_r2(s, max_alphabet=40),
            params={"max_alphabet": 40},
        ),
        _spread_descriptor("SY_SpreadRandomLocal_200_stdsampen1_02", STD_SAMPEN),
        FeatureDescriptor(
            "coeff_var_2", lambda s, seed: second_order_cv(s), params={}
        ),
        FeatureDescriptor(
            "median_absolute_deviation",
            lambda s, seed: mean_abs_dev_from_median(s),
            params={},
        ),
        FeatureDescriptor(
            "DN_SimpleFit_exp1_rmse_h30",
            lambda s, seed: exp_distribution_fit_rmse(s, n_bins=30),
            params={"n_bins": 30},
        ),
        FeatureDescriptor(
            "CO_Embed2_tau_arearat",
            lambda s, seed: embedding_area_ratio(s, max_lag=200),
            params={"max_lag": 200},
        ),
        FeatureDescriptor(
            "mean", _series_stat(lambda x: float(np.mean(x))), params={}
        ),
        FeatureDescriptor(
            "std", _series_stat(lambda x: float(np.std(x, ddof=1))), params={}
        ),
        _autocorr_descriptor(1),
        _autocorr_descriptor(2),
        _autocorr_descriptor(3),
    ]
    names = [d.name for d in descriptors]
    assert len(names) == len(set(names))
    return descriptors


CORE_FEATURE_NAMES = (
    "CO_trev_mi_num",
    "DN_OutlierTest2_std",
    "SY_SpreadRandomLocal_200_meanapen1_02",
    "ST_dyntrans40_1_mineigfexp_adjr2",
    "SY_SpreadRandomLocal_200_stdsampen1_02",
    "coeff_var_2",
    "median_absolute_deviation",
    "DN_SimpleFit_exp1_rmse_h30",
    "CO_Embed2_tau_arearat",
)

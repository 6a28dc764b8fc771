from .catalog import CORE_FEATURE_NAMES, FeatureDescriptor, default_catalog
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
    apen,
    local_entropy_spread,
    sampen,
)
from .geometry import convex_hull, convex_hull_area, polygon_area
from .symbolic import (
    min_eigenvalue,
    symbolize_equiprobable,
    transition_matrix,
    transition_mineig_decay_r2,
)
from .temporal import embedding_area_ratio, trev_numerator
from .values import DEGENERATE, NOT_FINITE, FeatureValue
from .fitting import fit_exp_decay, fit_exp_pdf_rate

__all__ = [
    "CORE_FEATURE_NAMES",
    "DEGENERATE",
    "EntropyParams",
    "FeatureDescriptor",
    "FeatureValue",
    "LocalWindowParams",
    "MEAN_APEN",
    "NOT_FINITE",
    "STD_SAMPEN",
    "apen",
    "convex_hull",
    "convex_hull_area",
    "default_catalog",
    "embedding_area_ratio",
    "exp_distribution_fit_rmse",
    "fit_exp_decay",
    "fit_exp_pdf_rate",
    "local_entropy_spread",
    "mean_abs_dev_from_median",
    "min_eigenvalue",
    "polygon_area",
    "sampen",
    "second_order_cv",
    "symbolize_equiprobable",
    "transition_matrix",
    "transition_mineig_decay_r2",
    "trev_numerator",
    "trimmed_std_ratio",
]

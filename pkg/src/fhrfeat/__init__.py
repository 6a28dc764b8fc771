"""fhrfeat: feature catalog, selection pipeline and event-rate reports for
uniformly sampled heart-rate-style time series."""

from .classify import (
    ThresholdClassifier,
    fit_threshold_classifier,
    misclassification_rate,
    permutation_pvalue,
)
from .cluster import (
    Dendrogram,
    auto_cluster_count,
    average_linkage,
    cut_tree,
    select_representatives,
)
from .correlation import (
    auto_mutual_info,
    autocorr,
    first_min_auto_mutual_info,
    first_zero_autocorr,
)
from .dataset import (
    LabeledDataset,
    OutcomeRecord,
    ingest_dataset,
    read_series_file,
    write_manifest,
    write_series_file,
)
from .everest import (
    EverestResult,
    OutcomeDefinition,
    everest,
    standard_outcomes,
    top_group_risk_ratio,
)
from .features import (
    CORE_FEATURE_NAMES,
    EntropyParams,
    FeatureDescriptor,
    FeatureValue,
    LocalWindowParams,
    apen,
    default_catalog,
    sampen,
)
from .matrix import (
    FeatureMatrix,
    build_feature_matrix,
    cell_seed,
    filter_special_features,
)
from .selection import (
    RegressionRanking,
    SelectionReport,
    abs_corr_matrix,
    bh_fdr_select,
    pearson_r,
    rank_by_regression,
    run_classification_selection,
)
from .series import (
    PreprocessConfig,
    Rejected,
    TimeSeries,
    interpolate_short_gaps,
    preprocess,
    trim_and_filter,
)
from .synth import SynthConfig, generate_synthetic, write_synthetic
from .util import derive_seed

__version__ = "0.1.0"

__all__ = [
    "CORE_FEATURE_NAMES",
    "Dendrogram",
    "EntropyParams",
    "EverestResult",
    "FeatureDescriptor",
    "FeatureMatrix",
    "FeatureValue",
    "LabeledDataset",
    "LocalWindowParams",
    "OutcomeDefinition",
    "OutcomeRecord",
    "PreprocessConfig",
    "RegressionRanking",
    "Rejected",
    "SelectionReport",
    "SynthConfig",
    "ThresholdClassifier",
    "TimeSeries",
    "abs_corr_matrix",
    "apen",
    "auto_cluster_count",
    "auto_mutual_info",
    "autocorr",
    "average_linkage",
    "bh_fdr_select",
    "build_feature_matrix",
    "cell_seed",
    "cut_tree",
    "default_catalog",
    "derive_seed",
    "everest",
    "filter_special_features",
    "first_min_auto_mutual_info",
    "first_zero_autocorr",
    "fit_threshold_classifier",
    "generate_synthetic",
    "ingest_dataset",
    "interpolate_short_gaps",
    "misclassification_rate",
    "pearson_r",
    "permutation_pvalue",
    "preprocess",
    "rank_by_regression",
    "read_series_file",
    "run_classification_selection",
    "sampen",
    "select_representatives",
    "standard_outcomes",
    "top_group_risk_ratio",
    "trim_and_filter",
    "write_manifest",
    "write_series_file",
    "write_synthetic",
]

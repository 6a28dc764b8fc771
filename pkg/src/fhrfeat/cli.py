"""Command-line surface: dataset generation, preprocessing, extraction,
selection, regression ranking and event-rate reports.

Exit codes: 0 success, 2 validation problem (bad flags, malformed input,
missing files), 1 unexpected internal error. Validation happens before any
output file is written.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .classify import fit_threshold_classifier
from .dataset import LOW_PH_CLASS_THRESHOLD, LabeledDataset, ingest_dataset, write_manifest, write_series_file
from .errors import FhrfeatError
from .everest import everest, standard_outcomes, top_group_risk_ratio
from .features.catalog import default_catalog
from .matrix import FeatureMatrix, build_feature_matrix, filter_special_features
from .selection import rank_by_regression, run_classification_selection
from .series import PreprocessConfig, Rejected, preprocess
from .svgplot import everest_svg, histogram_pair_svg, ranking_bar_svg
from .synth import SynthConfig, write_synthetic

EVEREST_PH_THRESHOLD = 7.05


class ValidationFailure(Exception):
    """User-facing input problem; maps to exit code 2."""


def _dump_json(path: Path, payload: dict) -> None:
    path.write_text(
        json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )


def _preprocess_config(args) -> PreprocessConfig:
    try:
        return PreprocessConfig(
            max_interp_gap_samples=args.max_gap,
            max_missing_fraction=args.max_missing_frac,
        )
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc


def _load_dataset(path) -> LabeledDataset:
    try:
        return ingest_dataset(path)
    except FhrfeatError as exc:
        raise ValidationFailure(str(exc)) from exc


def _preprocess_dataset(data: LabeledDataset, cfg: PreprocessConfig):
    kept, rejected = [], []
    for series in data.series:
        result = preprocess(series, cfg)
        if isinstance(result, Rejected):
            rejected.append(result)
        else:
            kept.append(result)
    return kept, rejected


def _load_matrix(path) -> FeatureMatrix:
    path = Path(path)
    if not path.exists():
        raise ValidationFailure(f"matrix file not found: {path}")
    try:
        m = FeatureMatrix.from_csv_text(path.read_text(encoding="utf-8"))
    except FhrfeatError as exc:
        raise ValidationFailure(str(exc)) from exc
    sidecar = path.with_suffix(path.suffix + ".provenance.json")
    if sidecar.exists():
        m.provenance = json.loads(sidecar.read_text(encoding="utf-8"))
    return m


def _low_ph_labels(m: FeatureMatrix, data: LabeledDataset, threshold: float, split: str):
    """Matrix row ids with a known pH (and the right split), plus 0/1 labels."""
    ids, labels = [], []
    for sid in m.ids:
        if sid not in data.outcomes:
            raise ValidationFailure(f"matrix row {sid!r} is not in the dataset manifest")
        rec = data.outcomes[sid]
        if split != "all" and rec.split != split:
            continue
        label = rec.low_ph_label(threshold)
        if label is None:
            continue
        ids.append(sid)
        labels.append(label)
    return ids, labels


# ---------------------------------------------------------------- commands


def cmd_synth(args) -> int:
    try:
        cfg = SynthConfig(
            n_series=args.n_series,
            length=args.length,
            effect_fraction=args.effect_fraction,
            spike_rate=args.spike_rate,
            spike_magnitude_bpm=args.spike_magnitude,
            test_fraction=args.test_fraction,
            seed=args.seed,
        )
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    manifest = write_synthetic(cfg, args.out)
    print(f"wrote {cfg.n_series} series and manifest to {manifest}")
    return 0


def cmd_preprocess(args) -> int:
    cfg = _preprocess_config(args)
    data = _load_dataset(args.dataset)
    out_dir = Path(args.out)
    kept, rejected = _preprocess_dataset(data, cfg)
    out_dir.mkdir(parents=True, exist_ok=True)
    series_files = {}
    for series in kept:
        rel = f"{series.id}.txt"
        write_series_file(out_dir / rel, series)
        series_files[series.id] = rel
    records = [data.outcomes[s.id] for s in kept]
    write_manifest(out_dir / "manifest.csv", records, series_files)
    _dump_json(
        out_dir / "preprocess_report.json",
        {
            "schema_version": 1,
            "config": {
                "max_interp_gap_samples": cfg.max_interp_gap_samples,
                "max_missing_fraction": cfg.max_missing_fraction,
            },
            "kept": [s.id for s in kept],
            "rejected": [
                {"id": r.id, "missing_fraction": r.missing_fraction} for r in rejected
            ],
        },
    )
    print(f"kept {len(kept)} series, rejected {len(rejected)}; output in {out_dir}")
    return 0


def cmd_extract(args) -> int:
    cfg = _preprocess_config(args)
    data = _load_dataset(args.dataset)
    out_path = Path(args.out)
    kept, rejected = _preprocess_dataset(data, cfg)
    if not kept:
        raise ValidationFailure("preprocessing rejected every series")
    catalog = default_catalog()
    matrix = build_feature_matrix(kept, catalog, seed=args.seed)
    matrix.provenance["rejected"] = [
        {"id": r.id, "missing_fraction": r.missing_fraction} for r in rejected
    ]
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(matrix.to_csv_text(), encoding="utf-8")
    _dump_json(
        Path(str(out_path) + ".provenance.json"),
        {"schema_version": 1, **matrix.provenance},
    )
    print(f"wrote {matrix.shape[0]}x{matrix.shape[1]} feature matrix to {out_path}")
    return 0


def cmd_select(args) -> int:
    if not 0 < args.fdr <= 1:
        raise ValidationFailure(f"--fdr must lie in (0, 1], got {args.fdr}")
    if args.n_perm < 1:
        raise ValidationFailure("--n-perm must be >= 1")
    if args.clusters != "auto":
        try:
            n_clusters = int(args.clusters)
        except ValueError as exc:
            raise ValidationFailure("--clusters must be an integer or 'auto'") from exc
        if n_clusters < 1:
            raise ValidationFailure("--clusters must be >= 1")
        k = n_clusters
    else:
        k = "auto"
    matrix = _load_matrix(args.matrix)
    data = _load_dataset(args.dataset)
    ids, labels = _low_ph_labels(matrix, data, args.ph_threshold, args.split)
    if len(set(labels)) < 2:
        raise ValidationFailure(
            f"split {args.split!r} at pH threshold {args.ph_threshold} does not "
            "contain both classes"
        )
    rows = filter_special_features(matrix.restrict_rows(ids))
    if not rows.names:
        raise ValidationFailure("every feature column contains special values")

    report = run_classification_selection(
        rows, labels, q=args.fdr, k=k, n_perm=args.n_perm, seed=args.seed
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = report.to_dict()
    payload["labeling"] = {
        "ph_threshold": args.ph_threshold,
        "split": args.split,
        "n_rows": len(ids),
        "n_low_ph": int(sum(labels)),
    }
    _dump_json(out_dir / "select_report.json", payload)

    panels = []
    y = np.array(labels)
    for name in report.representatives:
        x = rows.column_values(name)
        clf = fit_threshold_classifier(x, y, feature_name=name)
        panels.append((name, x[y == 0], x[y == 1], clf.threshold))
    if panels:
        (out_dir / "select_distributions.svg").write_text(
            histogram_pair_svg(panels), encoding="utf-8"
        )
    print(
        f"status={report.status} selected={len(report.selected)} "
        f"representatives={report.representatives}"
    )
    return 0


def cmd_regress(args) -> int:
    if args.n_perm < 1:
        raise ValidationFailure("--n-perm must be >= 1")
    matrix = _load_matrix(args.matrix)
    data = _load_dataset(args.dataset)
    ids, target = [], []
    for sid in matrix.ids:
        if sid not in data.outcomes:
            raise ValidationFailure(f"matrix row {sid!r} is not in the dataset manifest")
        ph = data.outcomes[sid].cord_ph
        if ph is None:
            continue
        ids.append(sid)
        target.append(ph)
    if len(ids) < 3:
        raise ValidationFailure("need at least 3 rows with a known cord pH")
    rows = filter_special_features(matrix.restrict_rows(ids))
    if not rows.names:
        raise ValidationFailure("every feature column contains special values")
    rankings = rank_by_regression(rows, target, n_perm=args.n_perm, seed=args.seed)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    _dump_json(
        out_dir / "regress_report.json",
        {
            "schema_version": 1,
            "n_rows": len(ids),
            "n_perm": args.n_perm,
            "seed": args.seed,
            "ranking": [
                {"name": r.name, "r": r.r, "p_value": r.p_value} for r in rankings
            ],
            "provenance": dict(rows.provenance),
        },
    )
    (out_dir / "regress_ranking.svg").write_text(
        ranking_bar_svg(rankings), encoding="utf-8"
    )
    best = rankings[0]
    print(f"top feature {best.name} R={best.r:+.3f} p={best.p_value:.4g}")
    return 0


def cmd_everest(args) -> int:
    if args.groups < 2:
        raise ValidationFailure("--groups must be >= 2")
    matrix = _load_matrix(args.matrix)
    data = _load_dataset(args.dataset)
    if args.feature not in matrix.names:
        raise ValidationFailure(f"feature {args.feature!r} not in the matrix")
    ids = []
    for sid in matrix.ids:
        if sid not in data.outcomes:
            raise ValidationFailure(f"matrix row {sid!r} is not in the dataset manifest")
        ids.append(sid)
    column = matrix.restrict_rows(ids).column(args.feature)
    if any(v.is_special for v in column):
        raise ValidationFailure(
            f"feature {args.feature!r} has special values; pick a clean column"
        )
    values = [v.value for v in column]
    outcome_rows = [data.outcomes[sid] for sid in ids]
    defs = standard_outcomes(ph_threshold=args.ph_threshold)
    try:
        result = everest(
            values, ids, outcome_rows, defs, n_group=args.groups,
            feature_name=args.feature,
        )
    except FhrfeatError as exc:
        raise ValidationFailure(str(exc)) from exc

    ratios = {}
    for d in defs:
        ratio = top_group_risk_ratio(result, d.name)
        ratios[d.name] = ratio if math.isfinite(ratio) else None

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    _dump_json(
        out_dir / "everest_report.json",
        {
            "schema_version": 1,
            **result.to_dict(),
            "top_group_risk_ratios": ratios,
            "ph_threshold": args.ph_threshold,
            "provenance": dict(matrix.provenance),
        },
    )
    (out_dir / "everest_rates.svg").write_text(everest_svg(result), encoding="utf-8")
    shown = {k: (f"{v:.2f}" if v is not None else "undefined") for k, v in ratios.items()}
    print(f"top-group risk ratios: {shown}")
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fhrfeat",
        description="Feature extraction, selection and event-rate reports for "
        "uniformly sampled heart-rate-style time series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_preprocess_flags(p):
        p.add_argument("--max-gap", type=int, default=60,
                       help="longest interior missing run to interpolate (samples)")
        p.add_argument("--max-missing-frac", type=float, default=0.2,
                       help="reject series whose remaining missing fraction exceeds this")

    synth_defaults = SynthConfig()
    p_synth = sub.add_parser("synth", help="generate a seeded synthetic dataset")
    p_synth.add_argument("--out", required=True, help="output directory")
    p_synth.add_argument("--n-series", type=int, default=synth_defaults.n_series)
    p_synth.add_argument("--length", type=int, default=synth_defaults.length)
    p_synth.add_argument("--effect-fraction", type=float,
                         default=synth_defaults.effect_fraction)
    p_synth.add_argument("--spike-rate", type=float, default=synth_defaults.spike_rate)
    p_synth.add_argument("--spike-magnitude", type=float,
                         default=synth_defaults.spike_magnitude_bpm)
    p_synth.add_argument("--test-fraction", type=float,
                         default=synth_defaults.test_fraction)
    p_synth.add_argument("--seed", type=int, default=synth_defaults.seed)
    p_synth.set_defaults(func=cmd_synth)

    p_prep = sub.add_parser("preprocess", help="interpolate, trim and filter a dataset")
    p_prep.add_argument("--dataset", required=True, help="manifest CSV path")
    p_prep.add_argument("--out", required=True, help="output directory")
    add_preprocess_flags(p_prep)
    p_prep.set_defaults(func=cmd_preprocess)

    p_extract = sub.add_parser("extract", help="evaluate the feature catalog")
    p_extract.add_argument("--dataset", required=True, help="manifest CSV path")
    p_extract.add_argument("--out", required=True, help="output matrix CSV path")
    p_extract.add_argument("--seed", type=int, default=0)
    add_preprocess_flags(p_extract)
    p_extract.set_defaults(func=cmd_extract)

    p_select = sub.add_parser("select", help="classification-based feature selection")
    p_select.add_argument("--matrix", required=True, help="feature matrix CSV path")
    p_select.add_argument("--dataset", required=True, help="manifest CSV path")
    p_select.add_argument("--out", required=True, help="output directory")
    p_select.add_argument("--fdr", type=float, default=0.001,
                          help="Benjamini-Hochberg false discovery rate")
    p_select.add_argument("--clusters", default="auto",
                          help="cluster count for representative picking, or 'auto'")
    p_select.add_argument("--n-perm", type=int, default=1000)
    p_select.add_argument("--seed", type=int, default=0)
    p_select.add_argument("--ph-threshold", type=float, default=LOW_PH_CLASS_THRESHOLD,
                          help="cord pH at or below this is the low-pH class")
    p_select.add_argument("--split", choices=("train", "test", "all"), default="train")
    p_select.set_defaults(func=cmd_select)

    p_regress = sub.add_parser("regress", help="rank features by |R| against cord pH")
    p_regress.add_argument("--matrix", required=True)
    p_regress.add_argument("--dataset", required=True)
    p_regress.add_argument("--out", required=True, help="output directory")
    p_regress.add_argument("--n-perm", type=int, default=1000)
    p_regress.add_argument("--seed", type=int, default=0)
    p_regress.set_defaults(func=cmd_regress)

    p_ev = sub.add_parser("everest", help="event rates across equally populated groups")
    p_ev.add_argument("--matrix", required=True)
    p_ev.add_argument("--dataset", required=True)
    p_ev.add_argument("--feature", required=True, help="matrix column to order patients by")
    p_ev.add_argument("--out", required=True, help="output directory")
    p_ev.add_argument("--groups", type=int, default=10)
    p_ev.add_argument("--ph-threshold", type=float, default=EVEREST_PH_THRESHOLD,
                      help="cord pH at or below this counts as a low-pH event")
    p_ev.set_defaults(func=cmd_everest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FhrfeatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

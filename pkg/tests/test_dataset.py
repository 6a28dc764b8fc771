import numpy as np
import pytest

from fhrfeat import OutcomeRecord, SynthConfig, generate_synthetic, ingest_dataset, write_synthetic
from fhrfeat.dataset import read_series_file, write_series_file
from fhrfeat.errors import DuplicateId, MissingFile, ParseError
from helpers import make_series, MISSING


def write_minimal_dataset(tmp_path, rows, series=None):
    series = series or {}
    lines = ["id,series_file,cord_ph,compromise,split"] + rows
    (tmp_path / "manifest.csv").write_text("\n".join(lines) + "\n")
    for name, content in series.items():
        (tmp_path / name).write_text(content)
    return tmp_path / "manifest.csv"


class TestIngest:
    def test_two_record_manifest(self, tmp_path):
        manifest = write_minimal_dataset(
            tmp_path,
            ["a,a.txt,7.2,false,train", "b,b.txt,7.05,true,test"],
            {"a.txt": "140.0\n141.0\n", "b.txt": "120.0\nnan\n122.0\n"},
        )
        data = ingest_dataset(manifest)
        assert len(data.series) == 2
        assert data.outcomes["a"].cord_ph == 7.2
        assert data.outcomes["b"].compromise is True
        assert data.outcomes["b"].split == "test"

    def test_nan_token_sets_missing_mask(self, tmp_path):
        manifest = write_minimal_dataset(
            tmp_path, ["a,a.txt,7.2,false,train"], {"a.txt": "1.0\nnan\n3.0\n"}
        )
        series = ingest_dataset(manifest).series[0]
        assert series.missing_mask.tolist() == [False, True, False]

    def test_missing_series_file(self, tmp_path):
        manifest = write_minimal_dataset(tmp_path, ["a,gone.txt,7.2,false,train"])
        with pytest.raises(MissingFile) as exc:
            ingest_dataset(manifest)
        assert "gone.txt" in str(exc.value)

    def test_duplicate_id(self, tmp_path):
        manifest = write_minimal_dataset(
            tmp_path,
            ["a,a.txt,7.2,false,train", "a,a.txt,7.3,false,train"],
            {"a.txt": "1.0\n"},
        )
        with pytest.raises(DuplicateId):
            ingest_dataset(manifest)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "manifest.csv"
        path.write_text("id,file\n")
        with pytest.raises(ParseError) as exc:
            ingest_dataset(path)
        assert exc.value.line == 1

    def test_bad_ph_reports_line_and_column(self, tmp_path):
        manifest = write_minimal_dataset(
            tmp_path, ["a,a.txt,acidic,false,train"], {"a.txt": "1.0\n"}
        )
        with pytest.raises(ParseError) as exc:
            ingest_dataset(manifest)
        assert exc.value.line == 2
        assert exc.value.column == 3

    def test_empty_ph_means_unknown(self, tmp_path):
        manifest = write_minimal_dataset(
            tmp_path, ["a,a.txt,,false,unassigned"], {"a.txt": "1.0\n"}
        )
        assert ingest_dataset(manifest).outcomes["a"].cord_ph is None

    def test_bad_split_rejected(self, tmp_path):
        manifest = write_minimal_dataset(
            tmp_path, ["a,a.txt,7.2,false,validation"], {"a.txt": "1.0\n"}
        )
        with pytest.raises(ParseError):
            ingest_dataset(manifest)


class TestSeriesFileRoundTrip:
    def test_values_and_mask_survive(self, tmp_path):
        ts = make_series([140.25, MISSING, 141.5, MISSING], sid="rt")
        path = tmp_path / "rt.txt"
        write_series_file(path, ts)
        back = read_series_file(path, "rt")
        np.testing.assert_array_equal(back.missing_mask, ts.missing_mask)
        np.testing.assert_array_equal(
            back.values[~back.missing_mask], ts.values[~ts.missing_mask]
        )


class TestSynthetic:
    def test_reproducible_from_config(self):
        cfg = SynthConfig(n_series=6, length=500, seed=42)
        a = generate_synthetic(cfg)
        b = generate_synthetic(cfg)
        for s1, s2 in zip(a.series, b.series):
            np.testing.assert_array_equal(s1.values[~s1.missing_mask],
                                          s2.values[~s2.missing_mask])
            np.testing.assert_array_equal(s1.missing_mask, s2.missing_mask)

    def test_round_trip_through_disk(self, tmp_path):
        cfg = SynthConfig(n_series=5, length=600, seed=9)
        manifest = write_synthetic(cfg, tmp_path / "data")
        data = generate_synthetic(cfg)
        back = ingest_dataset(manifest)
        assert [s.id for s in back.series] == [s.id for s in data.series]
        for s1, s2 in zip(data.series, back.series):
            np.testing.assert_array_equal(s1.missing_mask, s2.missing_mask)
            np.testing.assert_array_equal(
                s1.values[~s1.missing_mask], s2.values[~s2.missing_mask]
            )
        for sid, rec in data.outcomes.items():
            assert back.outcomes[sid] == rec

    def test_planted_group_lowers_outlier_ratio(self):
        from fhrfeat.features import trimmed_std_ratio
        from fhrfeat.series import PreprocessConfig, preprocess

        cfg = SynthConfig(n_series=16, length=2500, seed=21)
        data = generate_synthetic(cfg)
        planted, control = [], []
        for raw in data.series:
            series = preprocess(raw, PreprocessConfig())
            value = trimmed_std_ratio(series).value
            rec = data.outcomes[series.id]
            (planted if rec.cord_ph <= 7.1 else control).append(value)
        assert planted and control
        assert np.mean(planted) < np.mean(control)

    def test_manifest_row_count(self, tmp_path):
        manifest = write_synthetic(SynthConfig(n_series=10, length=450, seed=2), tmp_path / "d")
        lines = manifest.read_text().strip().split("\n")
        assert len(lines) == 11  # header + one row per series

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SynthConfig(n_series=2)
        with pytest.raises(ValueError):
            SynthConfig(length=100)


def test_outcome_record_validation():
    with pytest.raises(ValueError):
        OutcomeRecord("x", 9.0, False, "train")
    with pytest.raises(ValueError):
        OutcomeRecord("x", 7.2, False, "holdout")
    rec = OutcomeRecord("x", 7.1, False, "train")
    assert rec.low_ph_label() == 1
    assert OutcomeRecord("y", 7.11, False, "train").low_ph_label() == 0
    assert OutcomeRecord("z", None, False, "train").low_ph_label() is None

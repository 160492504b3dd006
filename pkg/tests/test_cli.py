import json
import os

import pytest

from rentlab.cli import main

BASE_CONFIG = {
    "version": 1,
    "seed": 13,
    "generator": {
        "n_listings": 18,
        "date_range": ["2023-01-01", "2023-01-14"],
        "noise_std": 6.0,
        "outlier_fraction": 0.01,
        "missing_fraction": 0.01,
    },
    "wrangle": {"multiplier": 0.5, "knn_k": 5},
    "features": {"amenity_k": 8, "standardize": False},
    "selection": {"mode": "none"},
    "models": {
        "families": ["lasso", "ridge", "elastic", "forest", "gbm"],
        "hyperparams": {"n_trees": 8, "n_rounds": 10, "max_depth": 5},
    },
    "eval": {"train_fraction": 0.8, "cv_k": 3, "search_samples": 0},
    "explain": {"top": 10, "budget": 20, "rows": 4},
}


def _write_config(tmp_path, overrides=None, name="config.json"):
    doc = json.loads(json.dumps(BASE_CONFIG))
    for key, value in (overrides or {}).items():
        if isinstance(value, dict):
            doc.setdefault(key, {}).update(value)
        else:
            doc[key] = value
    doc["output_dir"] = str(tmp_path / "out")
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path, doc["output_dir"]


class TestGenCommand:
    def test_writes_three_csvs(self, tmp_path, capsys):
        status = main(
            ["gen", "--seed", "7", "--listings", "50", "--start", "2023-01-01",
             "--end", "2023-01-07", "--out-dir", str(tmp_path)]
        )
        assert status == 0
        for name in ("listings.csv", "calendar.csv", "reviews.csv"):
            assert (tmp_path / name).is_file()

    def test_config_file_drives_generation(self, tmp_path):
        cfg_path = tmp_path / "gen.json"
        cfg_path.write_text(
            json.dumps({"n_listings": 5, "date_range": ["2023-02-01", "2023-02-03"], "seed": 3}),
            encoding="utf-8",
        )
        status = main(["gen", "--config", str(cfg_path), "--out-dir", str(tmp_path)])
        assert status == 0
        text = (tmp_path / "calendar.csv").read_text()
        assert text.count("\n") == 16  # header + 5*3 rows


class TestSentimentCommand:
    def test_appends_five_columns(self, tmp_path):
        main(["gen", "--seed", "5", "--listings", "12", "--start", "2023-01-01",
              "--end", "2023-01-05", "--out-dir", str(tmp_path)])
        out = tmp_path / "scored.csv"
        status = main(["sentiment", str(tmp_path / "reviews.csv"), "--out", str(out)])
        assert status == 0
        header = out.read_text().splitlines()[0].split(",")
        for col in ("pos", "neg", "neu", "compound", "label"):
            assert col in header

    def test_missing_lexicon_exits_2_naming_path(self, tmp_path, capsys):
        main(["gen", "--seed", "5", "--listings", "5", "--start", "2023-01-01",
              "--end", "2023-01-03", "--out-dir", str(tmp_path)])
        status = main(
            ["sentiment", str(tmp_path / "reviews.csv"), "--lexicon", "no/such/lex.tsv"]
        )
        assert status == 2
        assert "no/such/lex.tsv" in capsys.readouterr().err


class TestRunCommand:
    def test_full_run_exit_zero_with_five_model_rows(self, tmp_path, capsys):
        cfg_path, out_dir = _write_config(tmp_path)
        status = main(["run", "--config", str(cfg_path)])
        assert status == 0
        report = (tmp_path / "out" / "eval_report.csv").read_text().splitlines()
        header = report[0].split(",")
        assert header == ["Metric", "lasso", "ridge", "elastic", "forest", "gbm"]
        assert [row.split(",")[0] for row in report[1:]] == [
            "R-Squared",
            "Mean Absolute Error",
            "Root Mean Squared Error",
        ]
        for artifact in (
            "features.csv", "reviews_scored.csv", "model.json",
            "shap_ranking.csv", "shap_explanations.json",
            "wrangle_report.csv", "eval_report.json",
        ):
            assert (tmp_path / "out" / artifact).is_file()

    def test_same_config_twice_byte_identical(self, tmp_path):
        cfg_path, out_dir = _write_config(tmp_path)
        main(["run", "--config", str(cfg_path)])
        first = (tmp_path / "out" / "eval_report.csv").read_bytes()
        first_shap = (tmp_path / "out" / "shap_ranking.csv").read_bytes()
        main(["run", "--config", str(cfg_path), "--out-dir", str(tmp_path / "out_b")])
        second = (tmp_path / "out_b" / "eval_report.csv").read_bytes()
        second_shap = (tmp_path / "out_b" / "shap_ranking.csv").read_bytes()
        assert first == second
        assert first_shap == second_shap

    def test_thread_env_does_not_change_outputs(self, tmp_path, monkeypatch):
        cfg_path, _ = _write_config(tmp_path)
        monkeypatch.setenv("RENTLAB_THREADS", "1")
        main(["run", "--config", str(cfg_path), "--out-dir", str(tmp_path / "t1")])
        monkeypatch.setenv("RENTLAB_THREADS", "4")
        main(["run", "--config", str(cfg_path), "--out-dir", str(tmp_path / "t4")])
        a = (tmp_path / "t1" / "eval_report.csv").read_bytes()
        b = (tmp_path / "t4" / "eval_report.csv").read_bytes()
        assert a == b

    def test_missing_lexicon_in_config_exits_2(self, tmp_path, capsys):
        cfg_path, _ = _write_config(
            tmp_path, {"sentiment": {"lexicon": "missing/lex.tsv"}}
        )
        status = main(["run", "--config", str(cfg_path)])
        assert status == 2
        assert "missing/lex.tsv" in capsys.readouterr().err

    def test_config_without_seed_exits_2(self, tmp_path, capsys):
        doc = json.loads(json.dumps(BASE_CONFIG))
        del doc["seed"]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["run", "--config", str(path)]) == 2
        assert "seed" in capsys.readouterr().err

    def test_invalid_json_exits_2(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["run", "--config", str(path)]) == 2

    def test_run_on_existing_input_csvs(self, tmp_path):
        data_dir = tmp_path / "data"
        main(["gen", "--seed", "21", "--listings", "14", "--start", "2023-01-01",
              "--end", "2023-01-10", "--out-dir", str(data_dir)])
        doc = json.loads(json.dumps(BASE_CONFIG))
        del doc["generator"]
        doc["inputs"] = {
            "listings": str(data_dir / "listings.csv"),
            "calendar": str(data_dir / "calendar.csv"),
            "reviews": str(data_dir / "reviews.csv"),
        }
        doc["output_dir"] = str(tmp_path / "out")
        cfg_path = tmp_path / "inputs.json"
        cfg_path.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["run", "--config", str(cfg_path)]) == 0
        assert (tmp_path / "out" / "eval_report.csv").is_file()

    def test_run_with_missing_input_csv_exits_2(self, tmp_path, capsys):
        doc = json.loads(json.dumps(BASE_CONFIG))
        del doc["generator"]
        doc["inputs"] = {
            "listings": str(tmp_path / "absent_listings.csv"),
            "calendar": str(tmp_path / "absent_calendar.csv"),
            "reviews": str(tmp_path / "absent_reviews.csv"),
        }
        doc["output_dir"] = str(tmp_path / "out")
        cfg_path = tmp_path / "inputs.json"
        cfg_path.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["run", "--config", str(cfg_path)]) == 2
        assert "absent_listings.csv" in capsys.readouterr().err

    def test_wrangle_gap_flags_backfill_calendar(self, tmp_path):
        main(["gen", "--seed", "31", "--listings", "6", "--start", "2023-01-01",
              "--end", "2023-01-10", "--out-dir", str(tmp_path)])
        assert main(["wrangle", "--listings", str(tmp_path / "listings.csv"),
                     "--calendar", str(tmp_path / "calendar.csv"),
                     "--gap-start", "2023-02-01", "--gap-end", "2023-02-03",
                     "--out-dir", str(tmp_path)]) == 0
        cleaned = (tmp_path / "calendar_clean.csv").read_text().splitlines()[1:]
        gap_rows = [line for line in cleaned if ",2023-02-0" in line]
        # only listings whose history survived the outlier fences are backfilled
        survivors = {line.split(",")[0] for line in cleaned if ",2023-01-" in line}
        assert gap_rows
        assert len(gap_rows) == len(survivors) * 3
        report = (tmp_path / "wrangle_report.csv").read_text()
        assert "fill_calendar_gap" in report

    def test_selection_mode_kbest_writes_selection(self, tmp_path):
        cfg_path, out_dir = _write_config(
            tmp_path, {"selection": {"mode": "kbest", "k": 10}}
        )
        assert main(["run", "--config", str(cfg_path)]) == 0
        lines = (tmp_path / "out" / "selection.csv").read_text().splitlines()
        assert lines[0].startswith("feature,")
        assert len(lines) == 11


class TestStageComposition:
    def test_subcommands_reproduce_run_report(self, tmp_path):
        # defaults everywhere so stage flags can mirror the config exactly
        overrides = {"models": {"hyperparams": {}}, "explain": {"top": 5, "budget": 10, "rows": 3}}
        cfg_path, out_dir = _write_config(tmp_path, overrides)
        assert main(["run", "--config", str(cfg_path)]) == 0

        stage_dir = tmp_path / "stages"
        os.makedirs(stage_dir)
        gen_doc = dict(BASE_CONFIG["generator"])
        gen_doc["seed"] = BASE_CONFIG["seed"]
        (stage_dir / "gen.json").write_text(json.dumps(gen_doc), encoding="utf-8")
        assert main(["gen", "--config", str(stage_dir / "gen.json"),
                     "--out-dir", str(stage_dir)]) == 0
        assert main(["wrangle", "--listings", str(stage_dir / "listings.csv"),
                     "--calendar", str(stage_dir / "calendar.csv"),
                     "--multiplier", "0.5", "--knn-k", "5",
                     "--out-dir", str(stage_dir)]) == 0
        assert main(["sentiment", str(stage_dir / "reviews.csv"),
                     "--listings", str(stage_dir / "listings_clean.csv"),
                     "--out", str(stage_dir / "reviews_scored.csv")]) == 0
        assert main(["featurize", "--listings", str(stage_dir / "listings_clean.csv"),
                     "--calendar", str(stage_dir / "calendar_clean.csv"),
                     "--reviews-scored", str(stage_dir / "reviews_scored.csv"),
                     "--amenity-k", "8",
                     "--out", str(stage_dir / "features.csv")]) == 0
        assert main(["evaluate", "--features", str(stage_dir / "features.csv"),
                     "--families", "lasso", "ridge", "elastic", "forest", "gbm",
                     "--train-fraction", "0.8", "--cv-k", "3",
                     "--seed", str(BASE_CONFIG["seed"]),
                     "--out-dir", str(stage_dir)]) == 0

        via_run = (tmp_path / "out" / "eval_report.csv").read_bytes()
        via_stages = (stage_dir / "eval_report.csv").read_bytes()
        assert via_run == via_stages

        feats_run = (tmp_path / "out" / "features.csv").read_bytes()
        feats_stage = (stage_dir / "features.csv").read_bytes()
        assert feats_run == feats_stage


class TestTrainSelectExplain:
    @pytest.fixture()
    def features_csv(self, tmp_path):
        main(["gen", "--seed", "3", "--listings", "15", "--start", "2023-01-01",
              "--end", "2023-01-10", "--out-dir", str(tmp_path)])
        main(["wrangle", "--listings", str(tmp_path / "listings.csv"),
              "--calendar", str(tmp_path / "calendar.csv"),
              "--out-dir", str(tmp_path)])
        main(["featurize", "--listings", str(tmp_path / "listings_clean.csv"),
              "--calendar", str(tmp_path / "calendar_clean.csv"),
              "--amenity-k", "6", "--out", str(tmp_path / "features.csv")])
        return tmp_path / "features.csv"

    def test_train_then_explain(self, tmp_path, features_csv):
        model_path = tmp_path / "model.json"
        assert main(["train", "--features", str(features_csv), "--family", "ridge",
                     "--out", str(model_path)]) == 0
        doc = json.loads(model_path.read_text())
        assert doc["family"] == "linear"

        ranking = tmp_path / "rank.csv"
        explanations = tmp_path / "expl.json"
        assert main(["explain", "--model", str(model_path), "--data", str(features_csv),
                     "--top", "5", "--budget", "15", "--rows", "3",
                     "--out", str(ranking), "--explanations", str(explanations)]) == 0
        lines = ranking.read_text().splitlines()
        assert lines[0] == "feature,mean_abs_shap"
        assert 1 < len(lines) <= 6
        docs = json.loads(explanations.read_text())
        assert len(docs) == 3
        for doc in docs:
            total = doc["base_value"] + sum(doc["values"].values())
            assert abs(total - doc["prediction"]) < 1e-6

    def test_evaluate_with_random_search(self, tmp_path, features_csv):
        assert main(["evaluate", "--features", str(features_csv),
                     "--families", "lasso", "forest",
                     "--cv-k", "3", "--search-samples", "2", "--seed", "5",
                     "--out-dir", str(tmp_path / "ev")]) == 0
        doc = json.loads((tmp_path / "ev" / "eval_report.json").read_text())
        assert set(doc["search"]) == {"lasso", "forest"}
        for meta in doc["search"].values():
            assert meta["n_trials"] == 2
            assert "cv_score" in meta

    def test_select_forward_writes_ordered_list(self, tmp_path, features_csv):
        out = tmp_path / "sel.csv"
        assert main(["select", "--features", str(features_csv), "--mode", "forward",
                     "--max-features", "5", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "feature,order"
        assert len(lines) >= 2

    def test_train_on_selection(self, tmp_path, features_csv):
        sel = tmp_path / "sel.csv"
        main(["select", "--features", str(features_csv), "--mode", "kbest",
              "--k", "5", "--out", str(sel)])
        model_path = tmp_path / "model.json"
        assert main(["train", "--features", str(features_csv), "--family", "ols",
                     "--selection", str(sel), "--out", str(model_path)]) == 0
        doc = json.loads(model_path.read_text())
        assert len(doc["coefficients"]) == 5


class TestUsageErrors:
    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_no_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_missing_features_file_exits_2(self, capsys):
        assert main(["train", "--features", "nope.csv", "--family", "ols"]) == 2
        assert "nope.csv" in capsys.readouterr().err

#!/usr/bin/env python3
"""End-to-end demo: generate a synthetic market, run the full pipeline, and
print the evaluation report.

Usage: python scripts/run_demo.py [out_dir] [seed]
"""

from __future__ import annotations

import json
import pathlib
import sys
import tempfile

from rentlab.cli import main as rentlab_main


def run(out_dir: str, seed: int) -> int:
    config = {
        "version": 1,
        "seed": seed,
        "output_dir": out_dir,
        "generator": {
            "n_listings": 60,
            "date_range": ["2023-01-01", "2023-03-31"],
            "noise_std": 9.0,
            "outlier_fraction": 0.01,
            "missing_fraction": 0.01,
            "peak_uplift": 0.3,
        },
        "wrangle": {"multiplier": 0.5, "knn_k": 10},
        "features": {"amenity_k": 20},
        "selection": {"mode": "kbest", "k": 25},
        "models": {
            "families": ["lasso", "ridge", "elastic", "forest", "gbm"],
            "hyperparams": {"n_trees": 20, "n_rounds": 40, "max_depth": 8},
        },
        "eval": {"train_fraction": 0.8, "cv_k": 5, "search_samples": 0},
        "explain": {"top": 15, "budget": 100, "rows": 10},
    }
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(config, fh)
        cfg_path = fh.name
    status = rentlab_main(["run", "--config", cfg_path])
    if status == 0:
        report = pathlib.Path(out_dir) / "eval_report.csv"
        print()
        print(report.read_text())
    return status


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "demo_out"
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 7
    sys.exit(run(out, seed))

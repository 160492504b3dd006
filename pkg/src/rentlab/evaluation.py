"""Metrics, splits, k-fold cross-validation, and random hyperparameter search."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import UndefinedMetricError
from .features import FeatureMatrix
from .models import FAMILIES, HyperParams, fit_family, predict
from .tabular import Table

METRIC_ROWS = ("R-Squared", "Mean Absolute Error", "Root Mean Squared Error")


def _paired(y, yhat) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(y, dtype=np.float64).reshape(-1)
    b = np.asarray(yhat, dtype=np.float64).reshape(-1)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    if a.size == 0:
        raise ValueError("metrics need at least one element")
    return a, b


def rmse(y, yhat) -> float:
    a, b = _paired(y, yhat)
    err = a - b
    return math.sqrt(float(err @ err) / a.size)


def mae(y, yhat) -> float:
    a, b = _paired(y, yhat)
    return float(np.abs(a - b).mean())


def r_squared(y, yhat) -> float:
    a, b = _paired(y, yhat)
    centered = a - a.mean()
    sst = float(centered @ centered)
    if sst == 0.0:
        raise UndefinedMetricError("R^2 undefined: target has zero variance")
    err = a - b
    return 1.0 - float(err @ err) / sst


@dataclass(frozen=True)
class EvalReport:
    model_name: str
    r_squared: float
    mae: float
    rmse: float
    config: HyperParams = field(default_factory=HyperParams)
    feature_set: tuple[str, ...] = ()

    def __post_init__(self):
        if self.mae < 0 or self.rmse < 0:
            raise ValueError("errors cannot be negative")
        # power-mean inequality, with float slack
        if self.rmse < self.mae - 1e-9 * (1.0 + self.mae):
            raise ValueError(f"rmse {self.rmse} < mae {self.mae}")
        if self.r_squared > 1.0 + 1e-12:
            raise ValueError(f"r_squared {self.r_squared} > 1")


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: tuple[int, ...]

    def __post_init__(self):
        sizes = self.fold_sizes()
        if any(s == 0 for s in sizes):
            raise ValueError("every fold must be non-empty")
        if max(sizes) - min(sizes) > 1:
            raise ValueError(f"fold sizes differ by more than 1: {sizes}")
        if any(not 0 <= a < self.k for a in self.assignments):
            raise ValueError("fold index out of range")

    def fold_sizes(self) -> list[int]:
        sizes = [0] * self.k
        for a in self.assignments:
            sizes[a] += 1
        return sizes

    def fold_rows(self, fold: int) -> list[int]:
        return [i for i, a in enumerate(self.assignments) if a == fold]

    def other_rows(self, fold: int) -> list[int]:
        return [i for i, a in enumerate(self.assignments) if a != fold]


def train_test_split(
    m: FeatureMatrix, train_fraction: float = 0.8, seed: int = 0
) -> tuple[FeatureMatrix, FeatureMatrix]:
    """Uniform shuffle by seed; first round(n*fraction) rows train."""
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0,1), got {train_fraction}")
    n = m.n_rows
    if n < 2:
        raise ValueError(f"need at least 2 rows to split, got {n}")
    n_train = int(round(n * train_fraction))
    n_train = min(max(n_train, 1), n - 1)
    perm = np.random.default_rng(seed).permutation(n)
    return m.take(perm[:n_train]), m.take(perm[n_train:])


def kfold_plan(n: int, k: int, seed: int = 0) -> FoldPlan:
    """Shuffled fold assignment with sizes differing by at most one."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    perm = np.random.default_rng(seed).permutation(n)
    assignments = [0] * n
    base, extra = divmod(n, k)
    start = 0
    for fold in range(k):
        size = base + (1 if fold < extra else 0)
        for row in perm[start : start + size]:
            assignments[row] = fold
        start += size
    return FoldPlan(k, tuple(assignments))


def _derived_seed(seed: int, *indices: int) -> int:
    ss = np.random.SeedSequence((seed, *indices))
    return int(ss.generate_state(1, dtype=np.uint64)[0] % (2**31))


def cross_validate(
    m: FeatureMatrix, family: str, hp: HyperParams, k: int = 5, seed: int = 0
) -> EvalReport:
    """Mean validation R^2/MAE/RMSE over k seeded folds."""
    plan = kfold_plan(m.n_rows, k, seed)
    r2s, maes, rmses = [], [], []
    for fold in range(k):
        train = m.take(plan.other_rows(fold))
        val = m.take(plan.fold_rows(fold))
        model = fit_family(family, train, hp, seed=_derived_seed(seed, fold))
        yhat = predict(model, val)
        r2s.append(r_squared(val.y, yhat))
        maes.append(mae(val.y, yhat))
        rmses.append(rmse(val.y, yhat))
    return EvalReport(
        family,
        float(np.mean(r2s)),
        float(np.mean(maes)),
        float(np.mean(rmses)),
        hp,
        m.feature_names,
    )


def _grid_combo(grid: dict[str, list], index: int) -> dict:
    combo = {}
    for name in sorted(grid):
        values = grid[name]
        combo[name] = values[index % len(values)]
        index //= len(values)
    return combo


def random_search(
    m: FeatureMatrix,
    family: str,
    grid: dict[str, list],
    n_samples: int = 10,
    k: int = 5,
    seed: int = 0,
) -> tuple[HyperParams, float, list[EvalReport]]:
    """Sample hyperparameter combinations and score each by mean CV R^2.

    Sampling is without replacement when the grid is small (cardinality at
    most 10x n_samples, or n_samples covers it), with replacement otherwise.
    Winner is the highest mean R^2; ties break by lower RMSE, then sample
    order.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not grid or any(not v for v in grid.values()):
        raise ValueError("grid must be non-empty with non-empty value lists")
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")
    size = 1
    for values in grid.values():
        size *= len(values)
    rng = np.random.default_rng(np.random.SeedSequence((seed, 0x5EA)))
    if n_samples >= size:
        indices = np.arange(size)
    elif size <= 10 * n_samples:
        indices = rng.choice(size, size=n_samples, replace=False)
    else:
        indices = rng.integers(0, size, size=n_samples)

    trials: list[EvalReport] = []
    best: tuple[float, float, int] | None = None  # (-r2, rmse, order)
    best_hp = None
    for order, index in enumerate(indices):
        hp = HyperParams.from_dict(_grid_combo(grid, int(index)))
        report = cross_validate(m, family, hp, k=k, seed=_derived_seed(seed, order))
        trials.append(report)
        key = (-report.r_squared, report.rmse, order)
        if best is None or key < best:
            best = key
            best_hp = hp
    assert best_hp is not None
    return best_hp, -best[0], trials


@dataclass(frozen=True)
class ModelConfig:
    name: str
    family: str
    params: HyperParams = field(default_factory=HyperParams)
    seed: int = 0


def compare_models(
    m_train: FeatureMatrix, m_test: FeatureMatrix, configs: list[ModelConfig]
) -> list[EvalReport]:
    """Fit each configured family on train and score R^2/MAE/RMSE on test."""
    if m_train.feature_names != m_test.feature_names:
        raise ValueError("train and test feature sets differ")
    reports = []
    for cfg in configs:
        model = fit_family(cfg.family, m_train, cfg.params, seed=cfg.seed)
        yhat = predict(model, m_test)
        reports.append(
            EvalReport(
                cfg.name,
                r_squared(m_test.y, yhat),
                mae(m_test.y, yhat),
                rmse(m_test.y, yhat),
                cfg.params,
                m_train.feature_names,
            )
        )
    return reports


def reports_to_table(reports: list[EvalReport]) -> Table:
    """Rows = metrics, columns = model families."""
    data: dict[str, tuple[str, list]] = {"Metric": ("text", list(METRIC_ROWS))}
    for rep in reports:
        data[rep.model_name] = (
            "numeric",
            [rep.r_squared, rep.mae, rep.rmse],
        )
    return Table.from_dict(data)


def reports_to_doc(reports: list[EvalReport]) -> list[dict]:
    return [
        {
            "model_name": rep.model_name,
            "r_squared": rep.r_squared,
            "mae": rep.mae,
            "rmse": rep.rmse,
            "config": rep.config.to_dict(),
            "feature_set": list(rep.feature_set),
        }
        for rep in reports
    ]

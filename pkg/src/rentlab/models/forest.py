"""Bagged regression forest: bootstrap per tree, random feature subset per
split, prediction = arithmetic mean of the trees."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..features import FeatureMatrix
from .tree import TreeNode, fit_tree, predict_tree


@dataclass
class ForestModel:
    trees: list[TreeNode]
    max_features: int
    seed: int
    feature_names: tuple[str, ...] = ()
    bootstrap: bool = True

    def predict(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(np.asarray(x, dtype=np.float64))
        acc = np.zeros(x.shape[0], dtype=np.float64)
        for t in self.trees:
            acc += predict_tree(t, x)
        return acc / len(self.trees)


def _tree_rng(seed: int, tree_index: int) -> np.random.Generator:
    # per-tree stream keyed on (seed, index): results do not depend on the
    # order trees are fit in
    return np.random.default_rng(np.random.SeedSequence((seed, tree_index)))


def auto_max_features(p: int) -> int:
    return max(1, math.ceil(p / 3))


def fit_forest(
    m: FeatureMatrix,
    n_trees: int = 30,
    max_depth: int = 8,
    min_samples_split: int = 2,
    max_features: int = 0,
    seed: int = 0,
    bootstrap: bool = True,
) -> ForestModel:
    """Fit n_trees bagged trees; max_features=0 means ceil(p/3)."""
    if n_trees < 1:
        raise ValueError(f"n_trees must be >= 1, got {n_trees}")
    p = m.n_features
    mf = max_features if max_features else auto_max_features(p)
    if mf > p:
        raise ValueError(f"max_features {mf} exceeds feature count {p}")
    n = m.n_rows
    trees = []
    for t in range(n_trees):
        rng = _tree_rng(seed, t)
        if bootstrap:
            rows = rng.integers(0, n, size=n)
            sample = FeatureMatrix(m.x[rows], m.feature_names, m.y[rows], None)
        else:
            sample = m
        trees.append(
            fit_tree(sample, max_depth=max_depth, min_samples_split=min_samples_split,
                     max_features=mf, rng=rng)
        )
    return ForestModel(trees, mf, seed, feature_names=m.feature_names, bootstrap=bootstrap)

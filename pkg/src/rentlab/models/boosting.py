"""Gradient boosting with squared loss: start from the target mean, then
repeatedly fit a depth-limited tree to the residuals and add it scaled by the
learning rate."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyInputError
from ..features import FeatureMatrix
from .tree import TreeNode, fit_tree, predict_tree


@dataclass
class BoostedModel:
    base: float
    trees: list[TreeNode]
    learning_rate: float
    feature_names: tuple[str, ...] = ()

    def predict(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(np.asarray(x, dtype=np.float64))
        acc = np.full(x.shape[0], self.base, dtype=np.float64)
        for t in self.trees:
            acc += self.learning_rate * predict_tree(t, x)
        return acc


def fit_gbm(
    m: FeatureMatrix,
    n_rounds: int = 50,
    learning_rate: float = 0.1,
    max_depth: int = 3,
    min_samples_split: int = 2,
) -> BoostedModel:
    """Squared-loss boosting; the negative gradient is just the residual."""
    if not 0.0 < learning_rate <= 1.0:
        raise ValueError(f"learning_rate must be in (0,1], got {learning_rate}")
    if n_rounds < 0:
        raise ValueError(f"n_rounds must be >= 0, got {n_rounds}")
    if m.n_rows == 0:
        raise EmptyInputError("cannot fit on an empty matrix")
    y = np.asarray(m.y, dtype=np.float64)
    base = float(y.mean())
    pred = np.full(m.n_rows, base)
    trees: list[TreeNode] = []
    for _ in range(n_rounds):
        residual = y - pred
        stage = FeatureMatrix(m.x, m.feature_names, residual, None)
        tree = fit_tree(stage, max_depth=max_depth, min_samples_split=min_samples_split)
        trees.append(tree)
        pred += learning_rate * predict_tree(tree, m.x)
    return BoostedModel(base, trees, learning_rate, feature_names=m.feature_names)

"""CART regression trees: greedy SSE-reduction splits at midpoints between
sorted distinct values."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyInputError
from ..features import FeatureMatrix

MIN_GAIN = 1e-12


@dataclass
class TreeNode:
    """Leaf (feature is None) or binary split; v <= threshold goes left."""

    value: float
    n_samples: int
    feature: int | None = None
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    gain: float = 0.0

    @property
    def is_leaf(self) -> bool:
        return self.feature is None


def _best_split(x, y, idx, features):
    """Scan candidate features; return (gain, feature, threshold, left_mask)
    or None. Ties keep the lowest feature index, then lowest threshold."""
    n = idx.size
    node_y = y[idx]
    total_sum = node_y.sum()
    total_sq = float(node_y @ node_y)
    parent_sse = total_sq - total_sum * total_sum / n

    best = None
    for j in features:
        xs = x[idx, j]
        order = np.argsort(xs, kind="stable")
        sx = xs[order]
        if sx[0] == sx[-1]:
            continue
        sy = node_y[order]
        csum = np.cumsum(sy)[:-1]
        csq = np.cumsum(sy * sy)[:-1]
        k = np.arange(1, n, dtype=np.float64)
        left_sse = csq - csum * csum / k
        right_sse = (total_sq - csq) - (total_sum - csum) ** 2 / (n - k)
        gains = parent_sse - left_sse - right_sse
        gains[sx[1:] == sx[:-1]] = -np.inf
        pos = int(np.argmax(gains))
        gain = float(gains[pos])
        if gain <= MIN_GAIN:
            continue
        if best is None or gain > best[0]:
            a, b = float(sx[pos]), float(sx[pos + 1])
            thr = (a + b) / 2.0
            if not (a <= thr < b):
                thr = a
            best = (gain, j, thr, order[: pos + 1], order[pos + 1 :])
    return best


def _grow(x, y, idx, depth, max_depth, min_samples_split, max_features, rng):
    node_y = y[idx]
    mean = float(node_y.mean())
    n = idx.size
    if (
        depth >= max_depth
        or n < min_samples_split
        or n < 2
        or float(node_y.min()) == float(node_y.max())
    ):
        return TreeNode(mean, n)

    p = x.shape[1]
    if max_features is not None and max_features < p:
        features = np.sort(rng.choice(p, size=max_features, replace=False))
    else:
        features = np.arange(p)

    found = _best_split(x, y, idx, features)
    if found is None:
        return TreeNode(mean, n)
    gain, feature, thr, left_order, right_order = found
    left = _grow(x, y, idx[left_order], depth + 1, max_depth,
                 min_samples_split, max_features, rng)
    right = _grow(x, y, idx[right_order], depth + 1, max_depth,
                  min_samples_split, max_features, rng)
    return TreeNode(mean, n, feature=int(feature), threshold=thr,
                    left=left, right=right, gain=gain)


def fit_tree(
    m: FeatureMatrix,
    max_depth: int = 8,
    min_samples_split: int = 2,
    max_features: int | None = None,
    rng: np.random.Generator | None = None,
) -> TreeNode:
    """Grow a depth-limited regression tree; leaves predict the node mean."""
    if m.n_rows == 0:
        raise EmptyInputError("cannot fit a tree on an empty matrix")
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    if min_samples_split < 2:
        raise ValueError(f"min_samples_split must be >= 2, got {min_samples_split}")
    x = np.asarray(m.x, dtype=np.float64)
    y = np.asarray(m.y, dtype=np.float64)
    if rng is None:
        rng = np.random.default_rng(0)
    idx = np.arange(m.n_rows)
    return _grow(x, y, idx, 0, max_depth, min_samples_split, max_features, rng)


def predict_tree(node: TreeNode, x: np.ndarray) -> np.ndarray:
    """Vectorized tree traversal."""
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    out = np.empty(x.shape[0], dtype=np.float64)
    _route(node, x, np.arange(x.shape[0]), out)
    return out


def _route(node: TreeNode, x, rows, out) -> None:
    if node.is_leaf:
        out[rows] = node.value
        return
    go_left = x[rows, node.feature] <= node.threshold
    left_rows = rows[go_left]
    right_rows = rows[~go_left]
    if left_rows.size:
        _route(node.left, x, left_rows, out)
    if right_rows.size:
        _route(node.right, x, right_rows, out)


def tree_depth(node: TreeNode) -> int:
    if node.is_leaf:
        return 0
    return 1 + max(tree_depth(node.left), tree_depth(node.right))


def iter_splits(node: TreeNode):
    """Yield every split node (for impurity importances)."""
    if node.is_leaf:
        return
    yield node
    yield from iter_splits(node.left)
    yield from iter_splits(node.right)

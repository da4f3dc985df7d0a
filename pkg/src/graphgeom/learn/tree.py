"""CART decision trees (Gini impurity) and bagged random forests."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

_FEATURE_BLOCK = 64


def _resolve_max_features(max_features, n_features: int) -> int:
    if max_features is None:
        return n_features
    if max_features == "sqrt":
        return max(1, int(np.sqrt(n_features)))
    if max_features == "log2":
        return max(1, int(np.log2(n_features)))
    if isinstance(max_features, float):
        return max(1, int(max_features * n_features))
    return max(1, min(int(max_features), n_features))


def _best_split(X, yi, k, idx, feats, min_leaf):
    """Lowest weighted Gini split of ``idx`` over ``feats``.

    Returns ``(score, feature, threshold)`` where a larger score means a
    purer split, or ``None`` when no feature separates the node.
    """
    n = len(idx)
    best = None
    y_node = yi[idx]
    for start in range(0, len(feats), _FEATURE_BLOCK):
        fb = feats[start:start + _FEATURE_BLOCK]
        xs = X[np.ix_(idx, fb)]
        order = np.argsort(xs, axis=0, kind="stable")
        xs = np.take_along_axis(xs, order, axis=0)
        ys = y_node[order]
        left = np.cumsum(ys[..., None] == np.arange(k), axis=0, dtype=np.float64)
        total = left[-1]
        nl = np.arange(1, n + 1, dtype=np.float64)[:, None]
        nr = n - nl
        left, nl, nr = left[:-1], nl[:-1], nr[:-1]
        right = total - left
        with np.errstate(divide="ignore", invalid="ignore"):
            score = (left ** 2).sum(axis=2) / nl + (right ** 2).sum(axis=2) / nr
        valid = xs[:-1] < xs[1:]
        if min_leaf > 1:
            pos = np.arange(1, n)[:, None]
            valid &= (pos >= min_leaf) & (n - pos >= min_leaf)
        score = np.where(valid, score, -np.inf)
        flat = int(np.argmax(score))
        i, j = divmod(flat, score.shape[1])
        if np.isfinite(score[i, j]) and (best is None or score[i, j] > best[0] + 1e-12):
            best = (float(score[i, j]), int(fb[j]), float((xs[i, j] + xs[i + 1, j]) / 2))
    return best


class DecisionTreeClassifier(BaseEstimator, ClassifierMixin):
    """CART classifier with Gini impurity.

    Parameters
    ----------
    max_depth : int or None
        Depth cap; ``None`` grows until leaves are pure or unsplittable.
    min_samples_split, min_samples_leaf : int
        Usual CART stopping rules.
    max_features : None, "sqrt", "log2", int or float
        Features drawn per node. When none of the drawn features can split
        an impure node, the remaining features are tried as well.
    random_state : int
    """

    def __init__(self, max_depth=None, min_samples_split=2, min_samples_leaf=1,
                 max_features=None, random_state=0):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.min_samples_leaf = min_samples_leaf
        self.max_features = max_features
        self.random_state = random_state

    def fit(self, X, y, sample_index=None):
        X, y = check_X_y(X, y)
        self.classes_, yi = np.unique(y, return_inverse=True)
        if len(self.classes_) < 2:
            raise ValueError("training data contains a single class")
        self.n_features_in_ = X.shape[1]
        self._grow(X, yi, len(self.classes_), np.arange(len(y)) if sample_index is None else sample_index)
        return self

    def _grow(self, X, yi, k, root_idx):
        rng = np.random.default_rng(self.random_state)
        n_feat = X.shape[1]
        m = _resolve_max_features(self.max_features, n_feat)
        feature, threshold, left, right, value = [], [], [], [], []

        def new_node(idx):
            feature.append(-1)
            threshold.append(0.0)
            left.append(-1)
            right.append(-1)
            value.append(np.bincount(yi[idx], minlength=k).astype(np.float64))
            return len(feature) - 1

        stack = [(new_node(root_idx), root_idx, 0)]
        while stack:
            node, idx, depth = stack.pop()
            counts = value[node]
            if (np.count_nonzero(counts) <= 1 or len(idx) < self.min_samples_split
                    or (self.max_depth is not None and depth >= self.max_depth)):
                continue
            if m < n_feat:
                perm = rng.permutation(n_feat)
                split = _best_split(X, yi, k, idx, perm[:m], self.min_samples_leaf)
                if split is None:
                    split = _best_split(X, yi, k, idx, perm[m:], self.min_samples_leaf)
            else:
                split = _best_split(X, yi, k, idx, np.arange(n_feat), self.min_samples_leaf)
            if split is None:
                continue
            _, f, t = split
            go_left = X[idx, f] <= t
            li, ri = idx[go_left], idx[~go_left]
            feature[node], threshold[node] = f, t
            left[node], right[node] = new_node(li), new_node(ri)
            stack.append((right[node], ri, depth + 1))
            stack.append((left[node], li, depth + 1))
        self.feature_ = np.array(feature)
        self.threshold_ = np.array(threshold)
        self.children_left_ = np.array(left)
        self.children_right_ = np.array(right)
        v = np.array(value)
        self.value_ = v / v.sum(axis=1, keepdims=True)

    @property
    def node_count(self) -> int:
        return len(self.feature_)

    def apply(self, X) -> np.ndarray:
        check_is_fitted(self, "feature_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        node = np.zeros(len(X), dtype=np.int64)
        active = self.feature_[node] >= 0
        while active.any():
            a = np.flatnonzero(active)
            f = self.feature_[node[a]]
            go_left = X[a, f] <= self.threshold_[node[a]]
            node[a] = np.where(go_left, self.children_left_[node[a]], self.children_right_[node[a]])
            active = self.feature_[node] >= 0
        return node

    def predict_proba(self, X):
        return self.value_[self.apply(X)]

    def predict(self, X):
        return self.classes_[np.argmax(self.predict_proba(X), axis=1)]


class RandomForestClassifier(BaseEstimator, ClassifierMixin):
    """Bagged CART trees with per-node feature subsampling.

    Class probabilities are the mean of the trees' leaf distributions.
    """

    def __init__(self, n_estimators=50, max_depth=None, min_samples_leaf=1,
                 max_features="sqrt", bootstrap=True, random_state=0):
        self.n_estimators = n_estimators
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.max_features = max_features
        self.bootstrap = bootstrap
        self.random_state = random_state

    def fit(self, X, y):
        X, y = check_X_y(X, y)
        self.classes_, yi = np.unique(y, return_inverse=True)
        if len(self.classes_) < 2:
            raise ValueError("training data contains a single class")
        self.n_features_in_ = X.shape[1]
        seeds = np.random.SeedSequence(self.random_state).generate_state(self.n_estimators)
        self.estimators_ = []
        for s in seeds:
            rng = np.random.default_rng(int(s))
            idx = rng.integers(0, len(y), len(y)) if self.bootstrap else np.arange(len(y))
            idx = np.sort(idx)
            tree = DecisionTreeClassifier(max_depth=self.max_depth, min_samples_leaf=self.min_samples_leaf,
                                          max_features=self.max_features, random_state=int(s))
            tree.classes_ = self.classes_
            tree.n_features_in_ = X.shape[1]
            tree._grow(X, yi, len(self.classes_), idx)
            self.estimators_.append(tree)
        return self

    def predict_proba(self, X):
        check_is_fitted(self, "estimators_")
        X = check_array(X)
        return np.mean([t.predict_proba(X) for t in self.estimators_], axis=0)

    def predict(self, X):
        return self.classes_[np.argmax(self.predict_proba(X), axis=1)]

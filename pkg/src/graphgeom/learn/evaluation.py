"""Cross-validation, training curves and PCA."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..linalg import symmetric_eigh
from .dataset import N_FOLDS, Dataset, kfold, random_split
from .linear import LogisticRegression
from .metrics import confusion_matrix, linear_fit, metrics
from .mlp import MLPRegressor
from .tree import DecisionTreeClassifier, RandomForestClassifier

TRAINING_FRACTIONS = (10, 20, 30, 40, 50, 60, 70, 80, 90)

# "boosted" maps onto the bagged forest: no gradient-boosting learner is shipped
LEARNERS: dict[str, Callable[..., object]] = {
    "logistic": LogisticRegression,
    "tree": DecisionTreeClassifier,
    "forest": RandomForestClassifier,
    "boosted": RandomForestClassifier,
    "mlp": MLPRegressor,
}


def make_learner(name: str, **params):
    try:
        factory = LEARNERS[name]
    except KeyError:
        raise ValueError(f"unknown learner {name!r}; choose from {sorted(LEARNERS)}") from None
    return factory(**params)


@dataclass(frozen=True)
class Summary:
    mean: float
    std: float

    def __str__(self) -> str:
        return f"{self.mean:.3f} ± {self.std:.3f}"


def summarize(values) -> Summary:
    """Mean and sample standard deviation (0 for a single value)."""
    v = np.sort(np.asarray(values, dtype=np.float64))  # order-independent reduction
    std = float(np.std(v, ddof=1)) if len(v) > 1 else 0.0
    return Summary(float(np.mean(v)), std)


def _is_regression(d: Dataset) -> bool:
    return d.targets.dtype.kind == "f"


def evaluate(model, train: Dataset, val: Dataset) -> dict[str, float]:
    """Fit on ``train`` and score on ``val``.

    Classification reports P_N, phi (and F1 when binary); regression
    reports the a, c, R^2 of the predicted-vs-actual line.
    """
    model.fit(train.features, train.targets)
    pred = model.predict(val.features)
    if _is_regression(train):
        return linear_fit(pred, val.targets).as_dict()
    labels = np.unique(np.concatenate([train.targets, val.targets]))
    return metrics(confusion_matrix(val.targets, pred, labels))


def cross_validate(d: Dataset, learner: Callable[[], object], folds: int = N_FOLDS) -> dict[str, Summary]:
    """Five-fold cross-validation; each metric as mean ± sample stddev over folds."""
    per_fold: dict[str, list[float]] = {}
    for i in range(1, folds + 1):
        train, val = kfold(d, i)
        for k, v in evaluate(learner(), train, val).items():
            per_fold.setdefault(k, []).append(v)
    return {k: summarize(v) for k, v in per_fold.items()}


def training_curve(d: Dataset, learner: Callable[[], object], fractions=TRAINING_FRACTIONS,
                   repeats: int = 5, seed: int = 0) -> dict[int, dict[str, Summary]]:
    """Train on a random x% and validate on the rest, ``repeats`` times per x."""
    out = {}
    for x in fractions:
        runs: dict[str, list[float]] = {}
        for r in range(repeats):
            split_seed = int(np.random.SeedSequence([seed, x, r]).generate_state(1)[0])
            train, val = random_split(d, x / 100, split_seed)
            for k, v in evaluate(learner(), train, val).items():
                runs.setdefault(k, []).append(v)
        out[int(x)] = {k: summarize(v) for k, v in runs.items()}
    return out


@dataclass(frozen=True, eq=False)
class PcaResult:
    projected: np.ndarray
    components: np.ndarray
    explained_variance_ratio: np.ndarray


def pca_project(points, out_dim: int = 2) -> PcaResult:
    """Project mean-centred points onto the top ``out_dim`` covariance eigenvectors.

    Each component is signed so that its first nonzero loading is positive.
    """
    x = np.asarray(points, dtype=np.float64)
    if x.ndim != 2 or len(x) < 2:
        raise ValueError("PCA needs at least two points in a 2-D array")
    if out_dim > x.shape[1]:
        raise ValueError(f"out_dim {out_dim} exceeds the ambient dimension {x.shape[1]}")
    xc = x - x.mean(axis=0)
    cov = xc.T @ xc / (len(x) - 1)
    vals, vecs = symmetric_eigh((cov + cov.T) / 2)
    order = np.argsort(-vals, kind="stable")
    vals, vecs = np.clip(vals[order], 0.0, None), vecs[:, order]
    comps = vecs[:, :out_dim].T.copy()
    for c in comps:
        nz = np.flatnonzero(np.abs(c) > 1e-12)
        if nz.size and c[nz[0]] < 0:
            c *= -1
    total = vals.sum()
    ratio = vals[:out_dim] / total if total > 0 else np.zeros(out_dim)
    return PcaResult(xc @ comps.T, comps, ratio)

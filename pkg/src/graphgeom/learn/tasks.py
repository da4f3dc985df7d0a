"""Ready-made learning experiments: corpus, labels, balancing and learner.

Each recipe names a corpus, a labelling function and per-class
augmentation multipliers. Multipliers are chosen so that the augmented
classes come out roughly balanced on the corpora shipped here: every
graph of a class appears as that many random relabellings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..canon import enumerate_connected_upto
from ..corpus import CorpusEntry, default_corpus, girth5_corpus, max_vertices
from ..curvature import is_cd_ricci_flat, is_olly_ricci_flat
from ..graph import Graph
from ..invariants import is_acyclic, is_planar
from ..spectra import laplacian_spectrum, max_eigenvalue
from .dataset import Dataset, build_dataset, random_split
from .evaluation import Summary, cross_validate, evaluate, make_learner


MAX_LAMBDA_EPOCHS = 300


def _max_lambda(g: Graph) -> float:
    return max_eigenvalue(laplacian_spectrum(g))


@dataclass(frozen=True)
class TaskRecipe:
    name: str
    corpus: str                      # "default", "girth5" or "enumerated"
    label: Callable[[Graph], object]
    multipliers: dict | int
    learner: str
    learner_params: dict = field(default_factory=dict)
    random_labels: bool = False


RECIPES: dict[str, TaskRecipe] = {
    "acyclic": TaskRecipe("acyclic", "default", lambda g: int(is_acyclic(g)), {0: 5, 1: 60},
                          "forest", {"n_estimators": 40}),
    "planar": TaskRecipe("planar", "default", lambda g: int(is_planar(g)), {0: 12, 1: 5},
                         "forest", {"n_estimators": 40}),
    "olly_flat": TaskRecipe("olly_flat", "girth5", lambda g: int(is_olly_ricci_flat(g)), {0: 3, 1: 150},
                            "forest", {"n_estimators": 150, "max_features": 0.15}),
    "cd_flat": TaskRecipe("cd_flat", "girth5", lambda g: int(is_cd_ricci_flat(g)), {0: 3, 1: 60},
                          "forest", {"n_estimators": 100}),
    "random_control": TaskRecipe("random_control", "girth5", lambda g: int(is_olly_ricci_flat(g)),
                                 {0: 3, 1: 150}, "forest", {"n_estimators": 100}, random_labels=True),
}


def load_corpus(kind: str, seed: int) -> list[CorpusEntry]:
    if kind == "default":
        return default_corpus(seed)
    if kind == "girth5":
        return girth5_corpus(seed)
    if kind == "enumerated":
        return [CorpusEntry(g, "enumerated") for g in enumerate_connected_upto(7)]
    raise ValueError(f"unknown corpus {kind!r}")


def randomize_labels(d: Dataset, seed: int) -> Dataset:
    """Replace every row's label by a fair coin flip."""
    y = np.random.default_rng(np.random.SeedSequence([seed, 7])).integers(0, 2, len(d))
    return Dataset(d.features, y, d.folds, d.seed, d.pad_dim, {0: int((y == 0).sum()), 1: int((y == 1).sum())})


def task_dataset(recipe: TaskRecipe, seed: int, entries: list[CorpusEntry] | None = None,
                 pad_dim: int | None = None) -> Dataset:
    entries = load_corpus(recipe.corpus, seed) if entries is None else entries
    graphs = [e.graph for e in entries]
    labels = [recipe.label(g) for g in graphs]
    d = build_dataset(graphs, labels, pad_dim or max_vertices(graphs), seed, recipe.multipliers)
    return randomize_labels(d, seed) if recipe.random_labels else d


def run_classification_task(name: str, seed: int = 0, **overrides) -> dict:
    """Five-fold cross-validation report for a named recipe."""
    recipe = RECIPES[name]
    d = task_dataset(recipe, seed)
    params = {**recipe.learner_params, "random_state": seed, **overrides}
    scores = cross_validate(d, lambda: make_learner(recipe.learner, **params))
    return {
        "task": name,
        "learner": recipe.learner,
        "rows": len(d),
        "class_counts": {str(k): v for k, v in d.class_counts.items()},
        "metrics": {k: {"mean": s.mean, "std": s.std} for k, s in scores.items()},
        "table_row": table_row(scores),
    }


def table_row(scores: dict[str, Summary]) -> str:
    keys = [k for k in ("P_N", "F1", "phi") if k in scores]
    return "(" + ", ".join(str(scores[k]) for k in keys) + ")"


def max_lambda_dataset(seed: int, multiplier: int = 20) -> Dataset:
    graphs = enumerate_connected_upto(7)
    targets = [float(_max_lambda(g)) for g in graphs]
    return build_dataset(graphs, targets, 7, seed, multiplier)


def run_max_lambda_regression(seed: int = 0, train_fraction: float = 0.2, **mlp_params) -> dict:
    """MLP regression of the largest Laplacian eigenvalue, trained on a random 20%."""
    d = max_lambda_dataset(seed)
    train, val = random_split(d, train_fraction, seed)
    params = {"epochs": MAX_LAMBDA_EPOCHS, "random_state": seed, **mlp_params}
    fit = evaluate(make_learner("mlp", **params), train, val)
    return {"task": "max_lambda", "rows": len(d), "train_rows": len(train), "fit": fit}

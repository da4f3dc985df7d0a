"""Labelled datasets of padded adjacency matrices.

Each graph is relabelled by random permutations (the class-dependent
multiplier controls how many), the copies are zero-padded to a common
size, flattened, and the rows are shuffled. Five sequential folds are
assigned after shuffling.
"""

from __future__ import annotations

import csv
import io
import zipfile
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Mapping, Sequence

import numpy as np

from ..graph import Graph, GraphError, augment, pad

N_FOLDS = 5


@dataclass(eq=False)
class Dataset:
    """Feature rows, targets and fold ids.

    ``features`` has shape ``(rows, pad_dim ** 2)``; ``folds[i]`` is the
    0-based fold of row ``i``.
    """

    features: np.ndarray
    targets: np.ndarray
    folds: np.ndarray
    seed: int
    pad_dim: int
    class_counts: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.targets)

    def subset(self, index: np.ndarray) -> "Dataset":
        index = np.asarray(index)
        return Dataset(self.features[index], self.targets[index], self.folds[index],
                       self.seed, self.pad_dim, _counts(self.targets[index]))


def _counts(targets: np.ndarray) -> dict:
    if targets.dtype.kind == "f":
        return {}
    return dict(sorted(Counter(targets.tolist()).items()))


def sequential_folds(n_rows: int, k: int = N_FOLDS) -> np.ndarray:
    """Fold id ``i * k // n_rows``: contiguous groups whose sizes differ by at most 1."""
    return (np.arange(n_rows) * k // max(n_rows, 1)).astype(np.int64)


def build_dataset(graphs: Sequence[Graph], labels: Sequence, pad_dim: int, seed: int,
                  multipliers: Mapping[Hashable, int] | int | None = None) -> Dataset:
    """Augment, pad, flatten and shuffle.

    Parameters
    ----------
    graphs, labels : sequences of equal length
        One label (class or real target) per graph.
    pad_dim : int
        Padded matrix size; must be at least the largest vertex count.
    seed : int
        Drives every permutation and the final shuffle.
    multipliers : mapping, int or None
        Number of random relabellings per graph, by class label (or a
        single int for every graph). A multiplier of 0 keeps the graph as
        given; otherwise only the deduplicated relabellings are kept.

    Returns
    -------
    Dataset
    """
    if len(graphs) != len(labels):
        raise ValueError(f"{len(graphs)} graphs but {len(labels)} labels")
    too_big = [g.n for g in graphs if g.n > pad_dim]
    if too_big:
        raise GraphError(f"pad_dim {pad_dim} is smaller than a graph with {max(too_big)} vertices")
    ss = np.random.SeedSequence(seed)
    graph_seeds = ss.spawn(len(graphs) + 1)
    rows, targets = [], []
    for g, y, gs in zip(graphs, labels, graph_seeds):
        if multipliers is None:
            k = 0
        elif isinstance(multipliers, Mapping):
            if y not in multipliers:
                raise KeyError(f"no multiplier given for class {y!r}")
            k = int(multipliers[y])
        else:
            k = int(multipliers)
        if k < 0:
            raise ValueError("multipliers must be non-negative")
        copies = [g] if k == 0 else augment(g, k, int(gs.generate_state(1)[0]))
        for h in copies:
            rows.append(pad(h, pad_dim).flatten())
            targets.append(y)
    features = np.array(rows, dtype=np.float64).reshape(len(rows), pad_dim * pad_dim)
    targets = np.array(targets)
    order = np.random.default_rng(graph_seeds[-1]).permutation(len(rows))
    features, targets = features[order], targets[order]
    return Dataset(features, targets, sequential_folds(len(targets)), seed, pad_dim, _counts(targets))


def kfold(d: Dataset, i: int) -> tuple[Dataset, Dataset]:
    """Fold ``i`` (1-based) as validation, the other four as training."""
    if not 1 <= i <= N_FOLDS:
        raise ValueError(f"fold index must be in 1..{N_FOLDS}, got {i}")
    val = d.folds == i - 1
    return d.subset(np.flatnonzero(~val)), d.subset(np.flatnonzero(val))


def random_split(d: Dataset, train_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Uniform random ``train_fraction`` / remainder split of the rows."""
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    order = np.random.default_rng(seed).permutation(len(d))
    cut = int(round(train_fraction * len(d)))
    return d.subset(np.sort(order[:cut])), d.subset(np.sort(order[cut:]))


# --------------------------------------------------------------------------
# files


def _target_text(y) -> str:
    return repr(float(y)) if isinstance(y, (float, np.floating)) else str(y)


def dataset_to_csv(d: Dataset) -> str:
    """Header ``f0..f{D-1},target,fold``; 0/1 features are written as integers."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    dim = d.features.shape[1]
    w.writerow([f"f{i}" for i in range(dim)] + ["target", "fold"])
    integral = bool(np.all(d.features == np.round(d.features)))
    for x, y, f in zip(d.features, d.targets.tolist(), d.folds.tolist()):
        cells = [str(int(v)) for v in x] if integral else [repr(float(v)) for v in x]
        w.writerow(cells + [_target_text(y), str(f)])
    return buf.getvalue()


def save_csv(d: Dataset, path: str | Path) -> None:
    Path(path).write_bytes(dataset_to_csv(d).encode("utf-8"))


def load_csv(path: str | Path, target_column: str = "target", seed: int = 0) -> Dataset:
    """Read a dataset CSV; every column except the target and fold is a feature."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    if not rows:
        raise ValueError(f"{path} is empty")
    header = rows[0]
    if target_column not in header:
        raise KeyError(target_column)
    t = header.index(target_column)
    fold_col = header.index("fold") if "fold" in header else None
    feat_cols = [i for i in range(len(header)) if i not in (t, fold_col)]
    body = rows[1:]
    features = np.array([[float(r[i]) for i in feat_cols] for r in body], dtype=np.float64)
    raw = [r[t] for r in body]
    try:
        targets = np.array([int(v) for v in raw])
    except ValueError:
        try:
            targets = np.array([float(v) for v in raw])
        except ValueError:
            targets = np.array(raw)
    folds = (np.array([int(r[fold_col]) for r in body]) if fold_col is not None
             else sequential_folds(len(body)))
    dim = int(round(np.sqrt(len(feat_cols))))
    return Dataset(features.reshape(len(body), len(feat_cols)), targets, folds, seed, dim, _counts(targets))


def save_npz(d: Dataset, path: str | Path) -> None:
    """Compact binary form: an ``.npz`` archive with int8 features when they are 0/1.

    Archive members carry a fixed timestamp so equal datasets give equal bytes.
    """
    feats = d.features.astype(np.int8) if np.all(np.isin(d.features, (0, 1))) else d.features
    arrays = {"features": feats, "targets": d.targets, "folds": d.folds,
              "meta": np.array([d.seed, d.pad_dim], dtype=np.int64)}
    with zipfile.ZipFile(path, "w", compression=zipfile.ZIP_DEFLATED) as zf:
        for name, arr in arrays.items():
            buf = io.BytesIO()
            np.lib.format.write_array(buf, np.ascontiguousarray(arr), allow_pickle=False)
            info = zipfile.ZipInfo(f"{name}.npy", date_time=(1980, 1, 1, 0, 0, 0))
            info.compress_type = zipfile.ZIP_DEFLATED
            zf.writestr(info, buf.getvalue())


def load_npz(path: str | Path) -> Dataset:
    with np.load(path, allow_pickle=False) as z:
        seed, pad_dim = (int(v) for v in z["meta"])
        targets = z["targets"]
        return Dataset(z["features"].astype(np.float64), targets, z["folds"], seed, pad_dim, _counts(targets))

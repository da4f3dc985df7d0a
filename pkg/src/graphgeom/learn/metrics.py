"""Classification and regression quality measures.

The confusion matrix convention is rows = actual class, columns =
predicted class. For binary problems the positive class is the second
label, so the 2x2 layout reads ``((tn, fp), (fn, tp))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    labels: tuple
    counts: np.ndarray

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def confusion_matrix(y_true: Sequence, y_pred: Sequence, labels: Sequence | None = None) -> ConfusionMatrix:
    y_true, y_pred = np.asarray(y_true), np.asarray(y_pred)
    if y_true.shape != y_pred.shape:
        raise ValueError("y_true and y_pred differ in length")
    if labels is None:
        labels = np.unique(np.concatenate([y_true, y_pred]))
    labels = tuple(labels.tolist() if isinstance(labels, np.ndarray) else labels)
    index = {lab: i for i, lab in enumerate(labels)}
    counts = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for a, p in zip(y_true.tolist(), y_pred.tolist()):
        counts[index[a], index[p]] += 1
    return ConfusionMatrix(labels, counts)


def p_n(c: ConfusionMatrix) -> float:
    """Fraction of correct predictions."""
    if c.total == 0:
        raise ValueError("empty confusion matrix")
    return float(np.trace(c.counts) / c.total)


def matthews_phi(c: ConfusionMatrix) -> float:
    """Multiclass Matthews correlation coefficient.

    phi = (sum_klm C_kk C_lm - C_kl C_mk)
          / sqrt(sum_k (sum_l C_kl)(sum_{k'!=k, l'} C_k'l'))
            sqrt(sum_k (sum_l C_lk)(sum_{k'!=k, l'} C_l'k'))

    Returns 0 when either factor of the denominator vanishes.
    """
    C = c.counts.astype(np.float64)
    s = C.sum()
    t = C.sum(axis=1)  # actual totals
    p = C.sum(axis=0)  # predicted totals
    cov = np.trace(C) * s - float(t @ p)
    den_t = s * s - float(t @ t)
    den_p = s * s - float(p @ p)
    if den_t == 0 or den_p == 0:
        return 0.0
    return float(cov / math.sqrt(den_t * den_p))


@dataclass(frozen=True)
class BinaryRates:
    tpr: float
    fpr: float
    accuracy: float
    precision: float
    f1: float


def binary_rates(c: ConfusionMatrix) -> BinaryRates:
    """TPR, FPR, accuracy, precision and F1 for a 2x2 matrix.

    With ``tp, fp, fn, tn`` read from ``((tn, fp), (fn, tp))``, F1 is the
    harmonic mean of TPR and precision; undefined ratios are reported as 0.
    """
    if c.k != 2:
        raise ValueError(f"F1 is only defined for binary problems, got {c.k} classes")
    (tn, fp), (fn, tp) = c.counts.tolist()

    def ratio(a, b):
        return a / b if b else 0.0

    tpr = ratio(tp, tp + fn)
    precision = ratio(tp, tp + fp)
    return BinaryRates(
        tpr=tpr,
        fpr=ratio(fp, fp + tn),
        accuracy=ratio(tp + tn, tp + tn + fp + fn),
        precision=precision,
        f1=ratio(2 * tpr * precision, tpr + precision),
    )


def metrics(c: ConfusionMatrix) -> dict[str, float]:
    """``P_N`` and ``phi``, plus ``F1`` for binary problems."""
    out = {"P_N": p_n(c), "phi": matthews_phi(c)}
    if c.k == 2:
        out["F1"] = binary_rates(c).f1
    return out


@dataclass(frozen=True)
class LinearFit:
    a: float
    c: float
    r2: float

    def as_dict(self) -> dict[str, float]:
        return {"a": self.a, "c": self.c, "R2": self.r2}


def linear_fit(pred: Sequence[float], actual: Sequence[float]) -> LinearFit:
    """Least-squares line ``pred = a * actual + c`` with its R^2."""
    x = np.asarray(actual, dtype=np.float64)
    y = np.asarray(pred, dtype=np.float64)
    if x.shape != y.shape or x.size < 2:
        raise ValueError("linear_fit needs two equal-length sequences of at least 2 points")
    sxx = float(np.sum((x - x.mean()) ** 2))
    if sxx == 0:
        raise ValueError("actual values are constant; the slope is undefined")
    a = float(np.sum((x - x.mean()) * (y - y.mean())) / sxx)
    c = float(y.mean() - a * x.mean())
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    ss_res = float(np.sum((y - (a * x + c)) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return LinearFit(a, c, r2)

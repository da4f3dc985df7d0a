"""Laplacians, their spectra, and the classical spectral-gap lower bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .graph import Graph, GraphError, adjacency_matrix, connected_components
from .linalg import symmetric_eigenvalues

ZERO_TOL = 1e-8

MatrixKind = Literal["ordinary", "normalized", "weighted"]


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray
    matrix_kind: MatrixKind
    components: int = 1

    def zero_multiplicity(self, tol: float = ZERO_TOL) -> int:
        return int(np.sum(np.abs(self.values) < tol))


@dataclass(frozen=True)
class BoundReport:
    gap: float
    bound_standard: float
    bound_lin_yau: float
    satisfied: tuple[bool, bool]


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A (integer matrix)."""
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def weighted_laplacian(g: Graph) -> np.ndarray:
    if g.weights is None:
        raise GraphError("weighted_laplacian needs a weighted graph")
    a = adjacency_matrix(g, weighted=True)
    return np.diag(a.sum(axis=1)) - a


def _isolated_check(g: Graph) -> None:
    for v, d in enumerate(g.degrees):
        if d == 0:
            raise GraphError(f"vertex {v} is isolated; D^-1 is undefined there")


def normalized_laplacian_matrix(g: Graph) -> np.ndarray:
    """Random-walk Laplacian I - D^-1 A (not symmetric in general)."""
    _isolated_check(g)
    d = np.array(g.degrees, dtype=float)
    return np.eye(g.n) - adjacency_matrix(g) / d[:, None]


def symmetric_normalized_laplacian(g: Graph) -> np.ndarray:
    """D^-1/2 L D^-1/2, similar to I - D^-1 A."""
    _isolated_check(g)
    s = 1.0 / np.sqrt(np.array(g.degrees, dtype=float))
    m = s[:, None] * laplacian(g) * s[None, :]
    return (m + m.T) / 2  # exact symmetry for the eigensolver's check


def laplacian_spectrum(g: Graph) -> Spectrum:
    return Spectrum(symmetric_eigenvalues(laplacian(g)), "ordinary", connected_components(g))


def weighted_laplacian_spectrum(g: Graph) -> Spectrum:
    return Spectrum(symmetric_eigenvalues(weighted_laplacian(g)), "weighted", connected_components(g))


def normalized_laplacian_spectrum(g: Graph) -> Spectrum:
    return Spectrum(symmetric_eigenvalues(symmetric_normalized_laplacian(g)), "normalized",
                    connected_components(g))


def spectral_gap(s: Spectrum) -> float:
    """Second-smallest eigenvalue of a connected graph's spectrum."""
    if s.components != 1:
        raise GraphError(f"graph has {s.components} components; the zero eigenvalue has that "
                         "multiplicity, so there is no single spectral gap")
    if len(s.values) < 2:
        raise GraphError("spectral gap needs at least two vertices")
    return float(s.values[1])


def max_eigenvalue(s: Spectrum) -> float:
    return float(s.values[-1])


def diameter(g: Graph) -> float:
    best = 0
    for row in g.distance_matrix:
        if any(d is None for d in row):
            return math.inf
        best = max(best, max(row))
    return best


def volume(g: Graph) -> int:
    return sum(g.degrees)


def _connected_diameter(g: Graph) -> int:
    d = diameter(g)
    if math.isinf(d) or g.n < 2:
        raise GraphError("spectral bounds need a connected graph with at least two vertices")
    return int(d)


def bound_standard(g: Graph) -> float:
    """1 / (diameter * volume)."""
    return 1.0 / (_connected_diameter(g) * volume(g))


def bound_lin_yau(g: Graph) -> float:
    """1 / (d delta exp(d delta + 1) - 1), d = max degree, delta = diameter."""
    dd = max(g.degrees) * _connected_diameter(g)
    return 1.0 / (dd * math.exp(dd + 1) - 1.0)


def bound_report(g: Graph) -> BoundReport:
    gap = spectral_gap(normalized_laplacian_spectrum(g))
    b1, b2 = bound_standard(g), bound_lin_yau(g)
    return BoundReport(gap, b1, b2, (gap >= b1 - 1e-12, gap >= b2 - 1e-12))


def eigen_point_cloud(graphs: Iterable[Graph], dim: int) -> np.ndarray:
    """Rows of ascending normalized-Laplacian eigenvalues, left-padded with zeros."""
    rows = []
    for g in graphs:
        if g.n > dim:
            raise GraphError(f"graph with {g.n} vertices does not fit dimension {dim}")
        vals = normalized_laplacian_spectrum(g).values
        rows.append(np.concatenate([np.zeros(dim - g.n), vals]))
    return np.array(rows).reshape(-1, dim)


def spectra_table(graphs: Sequence[Graph]) -> list[dict]:
    """One record per graph with both spectra and the gap bounds."""
    from .graph6 import to_graph6

    out = []
    for g in graphs:
        rec = {"graph6": to_graph6(g)}
        lap = laplacian_spectrum(g)
        rec["laplacian"] = [float(x) for x in lap.values]
        if min(g.degrees, default=0) > 0:
            norm = normalized_laplacian_spectrum(g)
            rec["normalized"] = [float(x) for x in norm.values]
        if lap.components == 1 and g.n > 1:
            rep = bound_report(g)
            rec.update(gap=rep.gap, bound_standard=rep.bound_standard,
                       bound_lin_yau=rep.bound_lin_yau,
                       satisfied_standard=rep.satisfied[0], satisfied_lin_yau=rep.satisfied[1])
        out.append(rec)
    return out

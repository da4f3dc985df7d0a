"""Path homology of digraphs over the rationals.

Chains live on allowed elementary paths (vertex sequences following
arrows). The boundary of an allowed path may contain regular but
non-allowed faces; the invariant subspace Ω_p is the kernel of the
boundary composed with projection onto those non-allowed faces. Faces with
a repeated consecutive vertex are irregular and dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graph import DiGraph
from .linalg import sparse_nullspace, sparse_rank

Path = tuple[int, ...]


@dataclass(frozen=True)
class PathBasis:
    p: int
    paths: tuple[Path, ...]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of ∂ on ``domain``; rows index ``codomain`` (regular (p-1)-paths)."""

    domain: tuple[Path, ...]
    codomain: tuple[Path, ...]
    entries: tuple[tuple[int, ...], ...]

    def column(self, path: Path) -> dict[Path, int]:
        j = self.domain.index(path)
        return {self.codomain[i]: r[j] for i, r in enumerate(self.entries) if r[j]}


@dataclass(frozen=True)
class HomologyProfile:
    omega_dims: tuple[int, ...]
    homology_dims: tuple[int, ...]
    euler: int
    truncated: bool
    arrows: tuple[tuple[int, int], ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "arrows": [list(a) for a in self.arrows],
            "omega_dims": list(self.omega_dims),
            "homology_dims": list(self.homology_dims),
            "euler": self.euler,
            "truncated": self.truncated,
        }


def allowed_paths(d: DiGraph, p: int) -> PathBasis:
    """All vertex sequences of ``p`` consecutive arrows, lexicographic."""
    if p < 0:
        raise ValueError("path length must be >= 0")
    layer: list[Path] = [(v,) for v in range(d.n)]
    for _ in range(p):
        layer = [path + (w,) for path in layer for w in d.successors[path[-1]]]
    return PathBasis(p, tuple(sorted(layer)))


def faces(path: Path) -> list[tuple[Path, int]]:
    """Regular faces of an elementary path with their signs."""
    if len(path) <= 1:
        return []
    out = []
    for q in range(len(path)):
        face = path[:q] + path[q + 1:]
        if 0 < q < len(path) - 1 and path[q - 1] == path[q + 1]:
            continue  # irregular: consecutive repeat
        out.append((face, -1 if q % 2 else 1))
    return out


def boundary(paths: Sequence[Path], codomain: Sequence[Path] | None = None) -> BoundaryMatrix:
    """∂ of regular paths into the regular (p-1)-path coordinates.

    Without an explicit ``codomain`` the rows are every regular face that
    occurs, in lexicographic order.
    """
    cols: list[dict[Path, int]] = []
    for path in paths:
        col: dict[Path, int] = {}
        for face, sign in faces(path):
            col[face] = col.get(face, 0) + sign
        cols.append(col)
    if codomain is None:
        codomain = sorted({f for col in cols for f, c in col.items()})
    index = {f: i for i, f in enumerate(codomain)}
    rows = [[0] * len(paths) for _ in codomain]
    for j, col in enumerate(cols):
        for f, c in col.items():
            if c:
                if f not in index:
                    raise ValueError(f"face {f} is missing from the codomain")
                rows[index[f]][j] = c
    return BoundaryMatrix(tuple(paths), tuple(codomain), tuple(tuple(r) for r in rows))


def boundary_matrix(d: DiGraph, p: int) -> BoundaryMatrix:
    """∂ on allowed p-paths; rows are allowed (p-1)-paths then other regular faces."""
    if p < 1:
        raise ValueError("boundary_matrix needs p >= 1")
    dom = allowed_paths(d, p).paths
    allowed_prev = allowed_paths(d, p - 1).paths
    occurring = {f for path in dom for f, _ in faces(path)}
    codomain = sorted(set(allowed_prev) | occurring)
    return boundary(dom, codomain)


def _omega_sparse(d: DiGraph, p: int) -> tuple[tuple[Path, ...], list[dict[int, Fraction]]]:
    dom = allowed_paths(d, p).paths
    if p <= 1 or not dom:
        return dom, [{j: Fraction(1)} for j in range(len(dom))]
    allowed_prev = set(allowed_paths(d, p - 1).paths)
    # one constraint row per non-allowed regular face
    bad: dict[Path, dict[int, Fraction]] = {}
    for j, path in enumerate(dom):
        for face, sign in faces(path):
            if face not in allowed_prev:
                row = bad.setdefault(face, {})
                row[j] = row.get(j, 0) + sign
    rows = [bad[f] for f in sorted(bad)]
    return dom, sparse_nullspace(rows, len(dom))


def omega_basis(d: DiGraph, p: int) -> tuple[tuple[Path, ...], list[list[Fraction]]]:
    """Allowed p-paths and a basis of Ω_p in those coordinates."""
    dom, basis = _omega_sparse(d, p)
    zero = Fraction(0)
    return dom, [[v.get(j, zero) for j in range(len(dom))] for v in basis]


def omega_dims(d: DiGraph, p_max: int | None = None) -> list[int]:
    p_max = d.n if p_max is None else p_max
    return [len(_omega_sparse(d, p)[1]) for p in range(p_max + 1)]


def _boundary_rank(dom: tuple[Path, ...], basis: list[dict[int, Fraction]]) -> int:
    """Rank of ∂ on span(basis); images only touch allowed faces by construction."""
    if not basis or len(dom[0]) == 1:
        return 0
    cols = [faces(path) for path in dom]
    index: dict[Path, int] = {}
    images = []
    for v in basis:
        img: dict[int, Fraction] = {}
        for j, c in v.items():
            for face, sign in cols[j]:
                k = index.setdefault(face, len(index))
                img[k] = img.get(k, 0) + sign * c
        images.append(img)
    return sparse_rank(images)


def homology_dims(d: DiGraph, p_max: int | None = None) -> HomologyProfile:
    """Ω and homology dimensions for p = 0..p_max and the Euler characteristic."""
    p_max = d.n if p_max is None else p_max
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    dims, ranks = [], []
    for p in range(p_max + 2):
        dom, basis = _omega_sparse(d, p)
        dims.append(len(basis))
        ranks.append(_boundary_rank(dom, basis))
    h = tuple(dims[p] - ranks[p] - ranks[p + 1] for p in range(p_max + 1))
    omega = tuple(dims[:p_max + 1])
    euler = sum((-1) ** p * x for p, x in enumerate(omega))
    return HomologyProfile(omega, h, euler, omega[-1] > 0, d.arrows)


def euler_number(d: DiGraph, p_max: int | None = None) -> tuple[int, bool]:
    """Alternating sum of Ω dimensions and whether it may be truncated."""
    prof = homology_dims(d, p_max)
    return prof.euler, prof.truncated

"""Exact rational linear algebra and a dense symmetric eigensolver.

Ranks, kernels and positive-semidefiniteness verdicts are computed over the
rationals with no tolerance. Spectra are floating point (cyclic Jacobi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np


class LinalgError(ValueError):
    pass


class ConvergenceError(ArithmeticError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual off-diagonal norm {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        ncols = cols if cols is not None else (len(data[0]) if data else 0)
        if any(len(r) != ncols for r in data):
            raise LinalgError("ragged rows")
        return cls(len(data), ncols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.entries], dtype=float).reshape(self.rows, self.cols)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i))

    def quadratic(self, f: Sequence) -> Fraction:
        f = [Fraction(x) for x in f]
        return sum((f[i] * self.entries[i][j] * f[j]
                    for i in range(self.rows) for j in range(self.cols)), Fraction(0))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise LinalgError("shape mismatch")
        ot = other.T.entries
        return RationalMatrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ot) for r in self.entries))


def _as_rows(m) -> list[list[Fraction]]:
    if isinstance(m, RationalMatrix):
        return [list(r) for r in m.entries]
    return [[Fraction(x) for x in r] for r in m]


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def rank(m) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    a = _integer_rows(_as_rows(m))
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            if f == 0:
                if p != prev:
                    a[i] = [(p * x) // prev for x in ai]
                continue
            ar = a[r]
            a[i] = [(p * ai[j] - f * ar[j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _sparse_rref(rows: list[dict[int, Fraction]]) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Gauss-Jordan elimination on rows stored as ``{column: value}``.

    Boundary-type matrices have a handful of nonzeros per row, so working
    on the support keeps elimination close to linear in the fill.
    """
    done: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        for prow, pc in zip(done, pivots):
            f = row.get(pc)
            if f:
                for c, v in prow.items():
                    x = row.get(c, 0) - f * v
                    if x:
                        row[c] = x
                    else:
                        row.pop(c, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {c: v * inv for c, v in row.items()}
        for prow in done:
            f = prow.get(pc)
            if f:
                for c, v in row.items():
                    x = prow.get(c, 0) - f * v
                    if x:
                        prow[c] = x
                    else:
                        prow.pop(c, None)
        done.append(row)
        pivots.append(pc)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [done[i] for i in order], [pivots[i] for i in order]


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = _as_rows(m)
    if not a:
        return [], []
    ncols = len(a[0])
    red, pivots = _sparse_rref([{c: x for c, x in enumerate(r) if x} for r in a])
    zero = Fraction(0)
    return [[r.get(c, zero) for c in range(ncols)] for r in red], pivots


def sparse_nullspace(rows: list[dict[int, Fraction]], ncols: int) -> list[dict[int, Fraction]]:
    """Kernel basis for sparse rows, one ``{column: value}`` vector per free column."""
    red, pivots = _sparse_rref(rows)
    pivset = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = {fc: Fraction(1)}
        for row, pc in zip(red, pivots):
            x = row.get(fc)
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    return len(_sparse_rref(rows)[1])


def nullspace(m, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel; one vector per free column."""
    rows = _as_rows(m)
    ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def rank_and_nullspace(m, cols: int | None = None) -> tuple[int, list[list[Fraction]]]:
    basis = nullspace(m, cols)
    ncols = cols if cols is not None else (m.cols if isinstance(m, RationalMatrix) else len(m[0]))
    return ncols - len(basis), basis


# --------------------------------------------------------------------------
# positive semidefiniteness


def psd_check_exact(m) -> bool:
    """Exact PSD test by symmetric-pivot LDL^T.

    A zero pivot is only admissible when the rest of its row vanishes;
    otherwise a 2x2 principal minor is negative.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise LinalgError("PSD test needs a square matrix")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise LinalgError(f"matrix is not symmetric at ({i}, {j})")
    for k in range(n):
        p = a[k][k]
        if p < 0:
            return False
        if p == 0:
            if any(a[k][j] != 0 for j in range(k + 1, n)):
                return False
            continue
        rk = a[k]
        for i in range(k + 1, n):
            f = a[i][k]
            if f == 0:
                continue
            f = f / p
            ri = a[i]
            for j in range(k + 1, n):
                if rk[j]:
                    ri[j] -= f * rk[j]
    return True


def as_symmetric(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise LinalgError(f"{name} must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise LinalgError(f"{name} is not symmetric")
    return a


def symmetric_eigenvalues(m, max_sweeps: int = 100) -> np.ndarray:
    """Full spectrum of a real symmetric matrix by cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm falls below ``1e-12``
    times its initial value. Returned in ascending order.
    """
    return np.sort(np.diag(_jacobi(as_symmetric(m), max_sweeps, vectors=False)[0]))


def symmetric_eigh(m, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors as columns."""
    a, v = _jacobi(as_symmetric(m), max_sweeps, vectors=True)
    w = np.diag(a)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _offnorm(a: np.ndarray) -> float:
    # summed directly: subtracting the diagonal from the full norm cancels catastrophically
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def _jacobi(a: np.ndarray, max_sweeps: int, vectors: bool):
    a = a.copy()
    n = a.shape[0]
    v = np.eye(n) if vectors else None
    off0 = _offnorm(a)
    if n < 2 or off0 == 0.0:
        return a, v
    target = 1e-12 * off0
    for _ in range(max_sweeps):
        if _offnorm(a) <= target:
            return a, v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                if vectors:
                    vp, vq = v[:, p].copy(), v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    residual = _offnorm(a)
    if residual <= target:
        return a, v
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", residual)


def psd_check(m, tol: float = 1e-9) -> bool:
    """Floating PSD test: every eigenvalue is at least ``-tol``."""
    return bool(symmetric_eigenvalues(m)[0] >= -tol) if np.asarray(m).size else True

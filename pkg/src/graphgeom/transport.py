"""Exact transportation (earth mover's) distance between discrete measures.

The primal transportation LP is solved by a two-phase tableau simplex over
``Fraction`` with Bland's rule, which terminates on the degenerate
vertices that transportation polytopes are full of.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence


class TransportError(ValueError):
    pass


@dataclass(frozen=True)
class TransportInstance:
    """Supply and demand measures with a cost matrix ``cost[i][j]``."""

    supply: tuple[tuple[Hashable, Fraction], ...]
    demand: tuple[tuple[Hashable, Fraction], ...]
    cost: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.cost) != len(self.supply) or any(len(r) != len(self.demand) for r in self.cost):
            raise TransportError("cost matrix shape must be |supply| x |demand|")
        for _, mass in self.supply + self.demand:
            if mass < 0:
                raise TransportError("masses must be non-negative")
        s = sum((m for _, m in self.supply), Fraction(0))
        d = sum((m for _, m in self.demand), Fraction(0))
        if s != d:
            raise TransportError(f"total supply {s} differs from total demand {d}")
        if s != 1:
            raise TransportError(f"measures must be probability distributions, total mass is {s}")

    @classmethod
    def between(cls, mu: dict, nu: dict, distance) -> "TransportInstance":
        """Instance for measures given as ``{site: mass}`` dicts.

        ``distance(a, b)`` gives the ground cost; zero-mass sites are dropped.
        """
        sup = tuple(sorted(((k, Fraction(v)) for k, v in mu.items() if v), key=lambda kv: repr(kv[0])))
        dem = tuple(sorted(((k, Fraction(v)) for k, v in nu.items() if v), key=lambda kv: repr(kv[0])))
        cost = tuple(tuple(Fraction(distance(a, b)) for b, _ in dem) for a, _ in sup)
        return cls(sup, dem, cost)


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [x * inv for x in T[r]]
    row = T[r]
    for i in range(len(T)):
        if i != r:
            f = T[i][c]
            if f:
                T[i] = [x - f * y for x, y in zip(T[i], row)]
    basis[r] = c


def _run(T, basis, cost, allowed) -> None:
    ncols = len(T[0]) - 1
    while True:
        entering = None
        for j in range(ncols):
            if not allowed[j] or j in basis:
                continue
            reduced = cost[j] - sum((cost[b] * T[i][j] for i, b in enumerate(basis)), Fraction(0))
            if reduced < 0:
                entering = j
                break
        if entering is None:
            return
        best = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise TransportError("LP is unbounded")
        _pivot(T, basis, best[1], entering)


def solve_equality_lp(A: Sequence[Sequence], b: Sequence, c: Sequence) -> tuple[Fraction, list[Fraction]]:
    """Minimise ``c.x`` subject to ``A x = b, x >= 0`` exactly."""
    m, n = len(A), len(c)
    rows = []
    for i in range(m):
        r = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            r, rhs = [-x for x in r], -rhs
        rows.append(r + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = list(range(n, n + m))
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    _run(rows, basis, phase1, [True] * (n + m))
    if any(rows[i][-1] != 0 for i, bv in enumerate(basis) if bv >= n):
        raise TransportError("LP is infeasible")
    # drive zero-level artificials out of the basis; rows with no real entry are redundant
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if rows[i][j] != 0), None)
            if col is None:
                continue
            _pivot(rows, basis, i, col)
        keep.append(i)
    rows = [rows[i][:n] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [Fraction(x) for x in c]
    _run(rows, basis, cost, [True] * n)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = rows[i][-1]
    return sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0)), x


def optimal_plan(t: TransportInstance) -> tuple[Fraction, list[list[Fraction]]]:
    """Optimal cost and flow matrix ``flow[i][j]``."""
    ms, md = len(t.supply), len(t.demand)
    A, b = [], []
    for i, (_, mass) in enumerate(t.supply):
        A.append([1 if k // md == i else 0 for k in range(ms * md)])
        b.append(mass)
    # the last demand row is implied by total-mass balance
    for j, (_, mass) in enumerate(t.demand[:-1]):
        A.append([1 if k % md == j else 0 for k in range(ms * md)])
        b.append(mass)
    c = [t.cost[k // md][k % md] for k in range(ms * md)]
    value, x = solve_equality_lp(A, b, c)
    return value, [x[i * md:(i + 1) * md] for i in range(ms)]


def transport_distance(t: TransportInstance) -> Fraction:
    return optimal_plan(t)[0]


def kantorovich_dual(t: TransportInstance) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Optimal potentials of the dual LP, solved independently of the primal.

    Maximises ``sum a_i u_i + sum b_j v_j`` subject to ``u_i + v_j <= c_ij``
    with free ``u, v``. Free variables are split into positive and
    negative parts and each constraint gets a slack, giving the standard
    form that ``solve_equality_lp`` accepts. Strong duality makes the value
    equal to the primal optimum.
    """
    ms, md = len(t.supply), len(t.demand)
    nfree = ms + md
    nvars = 2 * nfree + ms * md
    A, b = [], []
    for i in range(ms):
        for j in range(md):
            row = [0] * nvars
            row[i], row[nfree + i] = 1, -1
            row[ms + j], row[nfree + ms + j] = 1, -1
            row[2 * nfree + i * md + j] = 1
            A.append(row)
            b.append(t.cost[i][j])
    weights = [m for _, m in t.supply] + [m for _, m in t.demand]
    c = [-w for w in weights] + list(weights) + [Fraction(0)] * (ms * md)
    value, x = solve_equality_lp(A, b, c)
    pot = [x[k] - x[nfree + k] for k in range(nfree)]
    return -value, pot[:ms], pot[ms:]

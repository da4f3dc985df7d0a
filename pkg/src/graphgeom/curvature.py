"""Bakry-Émery and Lin-Lu-Yau curvature of graphs, in exact arithmetic.

Sign convention: the diffusion operator is

    Δf(x) = (1/d(x)) Σ_{y~x} (f(y) - f(x)),

the negative of the random-walk Laplacian I - D^-1 A, so that
Γ(f,f) = ½|∇f|² is non-negative. Γ₂ and every CD verdict are unchanged
under Δ -> -Δ (see ``convention``), only Γ flips sign.

Curvature-dimension forms at a vertex only involve f on the closed 2-ball
around it, so PSD checks run on the ball-restricted matrix.

Γ₂ is the iterated carré du champ ½(ΔΓ(f,g) - Γ(f,Δg) - Γ(g,Δf)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .graph import Graph, GraphError, is_connected
from .invariants import girth
from .linalg import RationalMatrix, psd_check_exact
from .transport import TransportInstance, transport_distance

Convention = Literal["geometric", "random_walk"]
INFINITY = math.inf
_ZERO = Fraction(0)

Form = dict  # {(u, v): Fraction}, symmetric, sparse


class CurvatureError(ArithmeticError):
    pass


# --------------------------------------------------------------------------
# sparse symmetric forms


def _add(acc: Form, other: Form, scale: Fraction = Fraction(1)) -> None:
    for k, v in other.items():
        acc[k] = acc.get(k, _ZERO) + scale * v


def _operator_row(g: Graph, x: int, convention: Convention) -> dict[int, Fraction]:
    d = g.degree(x)
    if d == 0:
        raise GraphError(f"vertex {x} is isolated; the normalized Laplacian is undefined there")
    s = 1 if convention == "geometric" else -1
    row = {y: Fraction(s, d) for y in g.neighbors[x]}
    row[x] = Fraction(-s)
    return row


def _sym_outer(a: dict, b: dict) -> Form:
    """Symmetric form of f -> (a.f)(b.f)."""
    out: Form = {}
    for i, ai in a.items():
        for j, bj in b.items():
            v = ai * bj / 2
            out[(i, j)] = out.get((i, j), _ZERO) + v
            out[(j, i)] = out.get((j, i), _ZERO) + v
    return out


def _gamma(g: Graph, x: int, convention: Convention) -> Form:
    """Γ(f,f)(x) = ½(Δ(f²) - 2fΔf)(x), expanded from the operator row."""
    row = _operator_row(g, x, convention)
    out: Form = {(z, z): c / 2 for z, c in row.items()}
    _add(out, _sym_outer({x: Fraction(1)}, row), Fraction(-1))
    return out


def _apply_right(form: Form, g: Graph, convention: Convention) -> dict:
    """Bilinear map (f, h) -> f^T B (Δ h) as a non-symmetric dict."""
    rows: dict = {}
    for (i, j), v in form.items():
        for k, c in _operator_row(g, j, convention).items():
            rows[(i, k)] = rows.get((i, k), _ZERO) + v * c
    return rows


def _gamma2(g: Graph, x: int, convention: Convention) -> Form:
    out: Form = {}
    for z, c in _operator_row(g, x, convention).items():
        _add(out, _gamma(g, z, convention), c / 2)
    bm = _apply_right(_gamma(g, x, convention), g, convention)
    for (i, j), v in bm.items():
        out[(i, j)] = out.get((i, j), _ZERO) - v / 2
        out[(j, i)] = out.get((j, i), _ZERO) - v / 2
    return out


def _laplacian_square(g: Graph, x: int) -> Form:
    row = _operator_row(g, x, "geometric")
    return _sym_outer(row, row)


def _ball(g: Graph, x: int, radius: int = 2) -> list[int]:
    dist = g.distances_from(x)
    return [v for v in range(g.n) if dist[v] is not None and dist[v] <= radius]


def _dense(form: Form, support: list[int]) -> list[list[Fraction]]:
    idx = {v: k for k, v in enumerate(support)}
    m = [[_ZERO] * len(support) for _ in support]
    for (i, j), v in form.items():
        if i not in idx or j not in idx:
            if v != 0:
                raise CurvatureError("form has support outside the closed 2-ball")
            continue
        m[idx[i]][idx[j]] += v
    return m


# --------------------------------------------------------------------------
# public forms


@dataclass(frozen=True)
class QuadraticFormAt:
    """Symmetric form over all vertices whose entries vanish outside the 2-ball of ``vertex``."""

    vertex: int
    form: RationalMatrix

    def __call__(self, f) -> Fraction:
        return self.form.quadratic(f)


def _full(g: Graph, x: int, form: Form) -> QuadraticFormAt:
    return QuadraticFormAt(x, RationalMatrix.from_rows(_dense(form, list(range(g.n))), g.n))


def _require_usable(g: Graph) -> None:
    for v, d in enumerate(g.degrees):
        if d == 0:
            raise GraphError(f"vertex {v} is isolated; curvature forms need every degree >= 1")


def gamma_form(g: Graph, x: int, convention: Convention = "geometric") -> QuadraticFormAt:
    """Matrix of f -> Γ(f,f)(x)."""
    _require_usable(g)
    return _full(g, x, _gamma(g, x, convention))


def gamma2_form(g: Graph, x: int, convention: Convention = "geometric") -> QuadraticFormAt:
    """Matrix of f -> Γ₂(f,f)(x)."""
    _require_usable(g)
    return _full(g, x, _gamma2(g, x, convention))


def laplacian_square_form(g: Graph, x: int) -> QuadraticFormAt:
    """Matrix of f -> (Δf(x))²."""
    _require_usable(g)
    return _full(g, x, _laplacian_square(g, x))


def cd_form(g: Graph, x: int, m, k) -> list[list[Fraction]]:
    """Ball-restricted matrix of Γ₂ - (1/m)(Δ·)² - kΓ at ``x`` (``m`` may be ``inf``)."""
    form = _gamma2(g, x, "geometric")
    if m != INFINITY:
        _add(form, _laplacian_square(g, x), -1 / Fraction(m))
    if k:
        _add(form, _gamma(g, x, "geometric"), -Fraction(k))
    return _dense(form, _ball(g, x))


def cd_check_vertex(g: Graph, x: int, m, k) -> bool:
    return psd_check_exact(cd_form(g, x, m, k))


def cd_check(g: Graph, m=INFINITY, k=0) -> bool:
    """True iff Γ₂ ≥ (1/m)(Δf)² + kΓ holds at every vertex (exact)."""
    if m != INFINITY and Fraction(m) < 1:
        raise CurvatureError(f"dimension m must be >= 1, got {m}")
    if not is_connected(g):
        raise GraphError("CD check expects a connected graph")
    _require_usable(g)
    return all(cd_check_vertex(g, x, m, k) for x in range(g.n))


def lin_yau_form(g: Graph, x: int) -> list[list[Fraction]]:
    """Ball-restricted Γ₂ - ½(Δ·)² - (1/d(G) - 1)Γ, d(G) the maximum degree."""
    dg = max(g.degrees)
    form = _gamma2(g, x, "geometric")
    _add(form, _laplacian_square(g, x), Fraction(-1, 2))
    _add(form, _gamma(g, x, "geometric"), -(Fraction(1, dg) - 1))
    return _dense(form, _ball(g, x))


def lin_yau_holds(g: Graph) -> bool:
    _require_usable(g)
    return all(psd_check_exact(lin_yau_form(g, x)) for x in range(g.n))


def is_cd_ricci_flat(g: Graph) -> bool:
    return cd_check(g, INFINITY, 0)


# --------------------------------------------------------------------------
# Lin-Lu-Yau curvature


@dataclass(frozen=True)
class EdgeCurvature:
    edge: tuple[int, int]
    alpha_samples: tuple[tuple[Fraction, Fraction], ...]
    limit: Fraction


def lazy_measure(g: Graph, x: int, alpha) -> dict[int, Fraction]:
    """Mass ``alpha`` at ``x``, the rest spread evenly over its neighbours."""
    alpha = Fraction(alpha)
    d = g.degree(x)
    mu = {y: (1 - alpha) / d for y in g.neighbors[x]}
    mu[x] = alpha
    return mu


def wasserstein(g: Graph, mu: dict, nu: dict) -> Fraction:
    dist = g.distance_matrix

    def cost(a, b):
        d = dist[a][b]
        if d is None:
            raise GraphError(f"vertices {a} and {b} are disconnected")
        return d

    return transport_distance(TransportInstance.between(mu, nu, cost))


def k_alpha(g: Graph, x: int, y: int, alpha) -> Fraction:
    """α-lazy Ollivier curvature 1 - W(μ_x^α, μ_y^α) / d(x, y)."""
    dxy = g.distance_matrix[x][y]
    if dxy is None:
        raise GraphError(f"vertices {x} and {y} are disconnected")
    return 1 - wasserstein(g, lazy_measure(g, x, alpha), lazy_measure(g, y, alpha)) / dxy


def lly_curvature(g: Graph, x: int, y: int, max_j: int = 12) -> EdgeCurvature:
    """Lin-Lu-Yau curvature as the limit of k_α/(1-α) for α -> 1.

    Samples α = 1 - 2^-j, j = 2, 3, ...; the limit is declared once three
    consecutive exact samples agree.
    """
    if x == y:
        raise GraphError("curvature needs two distinct vertices")
    if not is_connected(g):
        raise GraphError("LLY curvature expects a connected graph")
    samples: list[tuple[Fraction, Fraction]] = []
    hs: list[Fraction] = []
    for j in range(2, max_j + 1):
        alpha = 1 - Fraction(1, 2 ** j)
        ka = k_alpha(g, x, y, alpha)
        samples.append((alpha, ka))
        hs.append(ka / (1 - alpha))
        if len(hs) >= 3 and hs[-1] == hs[-2] == hs[-3]:
            return EdgeCurvature((x, y), tuple(samples), hs[-1])
    raise CurvatureError(f"k_alpha/(1-alpha) on ({x}, {y}) did not stabilise by j = {max_j}: "
                         f"last values {[str(h) for h in hs[-3:]]}")


def edge_curvatures(g: Graph) -> dict[tuple[int, int], Fraction]:
    return {(x, y): lly_curvature(g, x, y).limit for x, y in g.edges}


def is_olly_ricci_flat(g: Graph) -> bool:
    return all(lly_curvature(g, x, y).limit == 0 for x, y in g.edges)


Girth5Class = Literal["olly_flat", "cd_flat", "both", "neither"]


def classify_girth5(g: Graph) -> Girth5Class:
    gi = girth(g)
    if gi < 5:
        raise GraphError(f"girth {gi} < 5: the Ricci-flat classifications only cover girth >= 5")
    olly, cd = is_olly_ricci_flat(g), is_cd_ricci_flat(g)
    if olly and cd:
        return "both"
    if olly:
        return "olly_flat"
    if cd:
        return "cd_flat"
    return "neither"


def curvature_report(g: Graph) -> dict:
    """JSON-ready per-edge LLY curvature and per-vertex CD(∞,0) verdicts."""
    from .graph6 import to_graph6

    curv = edge_curvatures(g)
    cd = [cd_check_vertex(g, x, INFINITY, 0) for x in range(g.n)]
    return {
        "graph6": to_graph6(g),
        "edges": [{"edge": [x, y], "lly": f"{c.numerator}/{c.denominator}"} for (x, y), c in curv.items()],
        "cd_inf_0": cd,
        "olly_ricci_flat": all(c == 0 for c in curv.values()),
        "cd_ricci_flat": all(cd),
    }

"""Graded chart maps, the map phi, the six cone families, and weight polytopes.

Coordinate orders: graded charts are ``(l[1..n], x[1..N])``; cluster charts are
``(x[-1..-n], x[1..N])``.  Cone rows are integer vectors in these orders.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .cartan import CartanMatrix, ReducedWord, Word, require_longest, weyl_dim
from .coords import cluster_vars, graded_vars, lam, x
from .errors import CartanError
from .linalg import inverse, matmul
from .polyhedral import ConeH, LatticeMap, check_dim, lattice_points
from .posrat import PosRat, RationalMap, VarSet, compose_all, tropicalize
from .potentials import _component
from .transitions import family_fn, zeta

CHART_KINDS = ("gr_iota_star", "gr_CA", "gr_CA_star", "gr_iota")
CONE_KINDS = ("graded_string", "graded_string_dual", "graded_lusztig", "graded_lusztig_dual", "ghkk", "bk")


def bracket(w: ReducedWord, k: int, l: int) -> int:
    """``{k, l}``: ``-c`` of the two letters if ``k < l < k+``, -1 if ``l`` is ``k`` or ``k+``, else 0.

    The middle case carries the Cartan weight so that commuting letters drop
    out; with a plain 1 the Chamber Ansatz identities fail from rank 3 on.
    """
    kp = w.succ[k]
    if k < l < kp:
        return -w.cartan(w.letter(k), w.letter(l))
    if l == k or l == kp:
        return -1
    return 0


def _chart(w: ReducedWord, kind: str) -> RationalMap:
    c = w.cartan
    n, N = w.n, w.N
    gv, cv = graded_vars(n, N), cluster_vars(n, N)
    star = c.star
    coords: list[PosRat] = []
    if kind == "gr_iota_star":
        for k in w.indices:
            kp = w.succ[k]
            if k < 0:
                e = {x(kp): -1}
            elif kp <= N:
                e = {x(k): 1, x(kp): -1}
            else:
                e = {x(k): 1, lam(star[w.letter(k)]): -1}
            coords.append(PosRat.monomial(gv, e))
        return RationalMap(gv, cv, coords)
    if kind == "gr_CA":
        for a in c.nodes:
            coords.append(PosRat.monomial(cv, {x(w.occurrences[star[a]][-1]): -1}))
        for k in range(1, N + 1):
            e: dict[str, int] = {}
            for l in w.indices:
                b = bracket(w, l, k)
                if b:
                    e[x(l)] = e.get(x(l), 0) + b
            coords.append(PosRat.monomial(cv, e))
        return RationalMap(cv, gv, coords)
    if kind == "gr_CA_star":
        for k in w.indices:
            e = {}
            if k < 0:
                e[lam(-k)] = -1
            for l in range(1, N + 1):
                v = bracket(w, k, l) + (c(w.letter(l), w.letter(k)) if k < 0 else 0)
                if v:
                    e[x(l)] = v
            coords.append(PosRat.monomial(gv, e))
        return RationalMap(gv, cv, coords)
    if kind == "gr_iota":
        for a in c.nodes:
            coords.append(PosRat.monomial(cv, {x(w.occurrences[a][-1]): -1}))
        for k in range(1, N + 1):
            coords.append(PosRat.monomial(cv, {x(k): -1, x(w.pred[k]): 1}))
        return RationalMap(cv, gv, coords)
    raise ValueError(f"unknown chart map {kind!r}; expected one of {CHART_KINDS}")


@lru_cache(maxsize=None)
def _chart_cached(i: Word, c: CartanMatrix, kind: str) -> RationalMap:
    return _chart(ReducedWord(i, c), kind)


def chart_map(i: Sequence[int], kind: str, c: CartanMatrix) -> RationalMap:
    return _chart_cached(require_longest(i, c), c, kind)


def chart_matrix(i: Sequence[int], kind: str, c: CartanMatrix) -> list[list[int]]:
    return chart_map(i, kind, c).matrix()


def d_map(c: CartanMatrix, N: int = 0) -> RationalMap:
    """``l'_a = prod_b l_b^{c_ab}``, ``x`` unchanged, on the graded chart with ``N`` x-variables."""
    gv = graded_vars(c.rank, N)
    coords = [PosRat.monomial(gv, {lam(b): c(a, b) for b in c.nodes}) for a in c.nodes]
    coords += [PosRat.var(gv, x(k)) for k in range(1, N + 1)]
    return RationalMap(gv, gv, coords)


def phi_chart(i: Sequence[int], c: CartanMatrix) -> RationalMap:
    """``gr_iota_star o D o gr_CA``: A-chart -> X-chart."""
    i = require_longest(i, c)
    return compose_all([chart_map(i, "gr_CA", c), d_map(c, len(i)), chart_map(i, "gr_iota_star", c)])


def phi_prime(i: Sequence[int], c: CartanMatrix) -> RationalMap:
    """``gr_CA_star o D o gr_iota``: A-chart -> X-chart."""
    i = require_longest(i, c)
    return compose_all([chart_map(i, "gr_iota", c), d_map(c, len(i)), chart_map(i, "gr_CA_star", c)])


# -- cones ----------------------------------------------------------------

def _rows(functions: Sequence[PosRat]) -> list[tuple[int, ...]]:
    out = []
    for f in functions:
        out.extend(tropicalize(f).rows())
    return out


def _signed(c: CartanMatrix) -> list[int]:
    return [-a for a in c.nodes] + list(c.nodes)


def explicit_string_rows(i: Word, c: CartanMatrix) -> list[tuple[int, ...]]:
    """``l_a >= x_k + sum_{l>k} c_{i_l,a} x_l`` for ``i_k = a``, plus ``trop zeta >= 0``."""
    n, N = c.rank, len(i)
    rows = []
    for k in range(1, N + 1):
        a = i[k - 1]
        row = [0] * (n + N)
        row[a - 1] = 1
        row[n + k - 1] = -1
        for l in range(k + 1, N + 1):
            row[n + l - 1] -= c(i[l - 1], a)
        rows.append(tuple(row))
    return rows + _rows([zeta(i, a, c) for a in c.nodes])


@lru_cache(maxsize=None)
def _build(i: Word, c: CartanMatrix, kind: str, route: str) -> ConeH:
    N = len(i)
    if kind in ("ghkk", "bk"):
        fs = [_component(kind, i, a, c) for a in _signed(c)]
        return ConeH(c.rank + N, tuple(_rows(fs)), cluster_vars(c.rank, N).names)
    family = {"graded_string": "string", "graded_string_dual": "string_dual",
              "graded_lusztig": "lusztig", "graded_lusztig_dual": "lusztig_dual"}.get(kind)
    if family is None:
        raise ValueError(f"unknown cone kind {kind!r}; expected one of {CONE_KINDS}")
    names = graded_vars(c.rank, N).names
    if kind == "graded_string" and route == "explicit":
        return ConeH(c.rank + N, tuple(explicit_string_rows(i, c)), names)
    fs = [family_fn(family, i, a, c) for a in _signed(c)]
    return ConeH(c.rank + N, tuple(_rows(fs)), names)


def build_cone(i: Sequence[int], kind: str, c: CartanMatrix, route: str = "functions") -> ConeH:
    """H-description of one of the six cones; ``route="explicit"`` for the graded string cone
    uses the closed-form weight inequalities instead of the ``nu`` functions."""
    return _build(require_longest(i, c), c, kind, route)


def cmm_map(i: Sequence[int], c: CartanMatrix, dual: bool = False) -> LatticeMap:
    """Closed-form unimodular map graded string -> graded Lusztig (or their dual versions)."""
    i = require_longest(i, c)
    n, N = c.rank, len(i)
    m = [[0] * (n + N) for _ in range(n + N)]
    for a in c.nodes:
        m[a - 1][c.star[a] - 1] = 1
    for k in range(1, N + 1):
        row = m[n + k - 1]
        b = i[k - 1]
        if dual:
            for a in c.nodes:
                row[a - 1] += c(b, a)
        else:
            row[b - 1] += 1
        row[n + k - 1] -= 1
        for l in range(k + 1, N + 1):
            row[n + l - 1] -= c(b, i[l - 1])
    return LatticeMap.of(m)


def cmm_composed(i: Sequence[int], c: CartanMatrix, dual: bool = False) -> list[list[int]]:
    """The same map obtained from the chart matrices."""
    if dual:
        a, b = chart_matrix(i, "gr_CA", c), inverse(chart_matrix(i, "gr_iota", c))
    else:
        a, b = inverse(chart_matrix(i, "gr_iota_star", c)), chart_matrix(i, "gr_CA_star", c)
    return [[int(v) for v in row] for row in matmul(a, b)]


def polytope_points(i: Sequence[int], kind: str, weight: Sequence[int], c: CartanMatrix) -> list[tuple[int, ...]]:
    """Lattice points ``x in N^N`` with ``(weight, x)`` in the graded string or Lusztig cone."""
    weight = tuple(int(v) for v in weight)
    if len(weight) != c.rank:
        raise CartanError(f"weight {weight} has wrong length for {c.type_label}")
    if any(v < 0 for v in weight):
        raise CartanError(f"weight {weight} is not dominant")
    cone_kind = {"string": "graded_string", "lusztig": "graded_lusztig"}.get(kind)
    if cone_kind is None:
        raise ValueError(f"polytope kind must be 'string' or 'lusztig', got {kind!r}")
    check_dim(c.num_positive_roots + 1)
    cone = build_cone(i, cone_kind, c)
    n, N = c.rank, len(cone.rows[0]) - c.rank
    positive = tuple(tuple(int(j == n + k) for j in range(n + N)) for k in range(N))
    cone = ConeH(cone.dim, cone.rows + positive, cone.coords)
    return lattice_points(cone, {a: v for a, v in enumerate(weight)})


def count_check(i: Sequence[int], kind: str, weight: Sequence[int], c: CartanMatrix) -> tuple[int, int]:
    return len(polytope_points(i, kind, weight, c)), weyl_dim(c, weight)


__all__ = ["CHART_KINDS", "CONE_KINDS", "bracket", "chart_map", "chart_matrix", "d_map", "phi_chart",
           "phi_prime", "build_cone", "explicit_string_rows", "cmm_map", "cmm_composed",
           "polytope_points", "count_check", "VarSet"]

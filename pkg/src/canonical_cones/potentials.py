"""GHKK potential components ``W_a`` and Berenstein-Kazhdan decoration components ``f^B_a``.

Both live on cluster charts with variables ``x[-n] .. x[N]`` (X-torus for ``W``,
A-torus for ``f^B``).  Divisor indices are ``a`` in ``-[n] u [n]``: ``-a``
belongs to the frozen vertex ``v_{a,0}``, ``+a`` to ``v_{a,m_a}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .cartan import CartanMatrix, ReducedWord, Word, require_longest, word_graph
from .cluster import carry_cluster, mutate_seed, seed_from_word, x_mutation
from .coords import cluster_vars, x
from .posrat import PosRat, pullback, tropicalize


@dataclass(frozen=True)
class PotentialComponent:
    word: Word
    divisor: int
    kind: str
    expression: PosRat

    def to_json(self) -> dict:
        return {"word": list(self.word), "divisor": self.divisor, "kind": self.kind,
                "expression": str(self.expression), "posrat": self.expression.to_json(),
                "trop": tropicalize(self.expression).to_json()}


def _check_divisor(a: int, c: CartanMatrix) -> None:
    if a == 0 or abs(a) > c.rank:
        raise ValueError(f"divisor index {a} is not in -[{c.rank}] u [{c.rank}]")


def _aux(i: Word, a: int, c: CartanMatrix) -> Word:
    return word_graph(c).nearest(i, lambda w: w[-1] == a)


def _ghkk_closed(i: Word, a: int, c: CartanMatrix) -> PosRat:
    w = ReducedWord(i, c)
    vs = cluster_vars(c.rank, w.N)
    if a > 0:
        return PosRat.var(vs, x(w.N)).inv()
    b = -a
    occ = w.occurrences[b]
    total = PosRat.const(vs, 0)
    for k in range(w.m(b)):
        total = total + PosRat.monomial(vs, {x(occ[l]): -1 for l in range(k + 1)})
    return total


def _bk_closed(i: Word, a: int, c: CartanMatrix) -> PosRat:
    w = ReducedWord(i, c)
    vs = cluster_vars(c.rank, w.N)
    if a > 0:
        return PosRat.monomial(vs, {x(w.pred[w.N]): 1, x(w.N): -1})
    b = -a
    total = PosRat.const(vs, 0)
    for k in w.occurrences[b][1:]:
        exps = {x(w.pred[k]): -1, x(k): -1}
        for l in w.indices:
            if l < k < w.succ[l]:
                exps[x(l)] = exps.get(x(l), 0) - c(w.letter(l), b)
        total = total + PosRat.monomial(vs, exps)
    return total


@lru_cache(maxsize=None)
def _component(kind: str, i: Word, a: int, c: CartanMatrix) -> PosRat:
    if a < 0 or i[-1] == a:
        return _ghkk_closed(i, a, c) if kind == "ghkk" else _bk_closed(i, a, c)
    j = _aux(i, a, c)
    variety = "X" if kind == "ghkk" else "A"
    return carry_cluster(_component(kind, j, a, c), variety, i, j, c)


def ghkk_component(i: Sequence[int], a: int, c: CartanMatrix) -> PotentialComponent:
    i = require_longest(i, c)
    _check_divisor(a, c)
    return PotentialComponent(i, a, "ghkk", _component("ghkk", i, a, c))


def bk_component(i: Sequence[int], a: int, c: CartanMatrix) -> PotentialComponent:
    i = require_longest(i, c)
    _check_divisor(a, c)
    return PotentialComponent(i, a, "bk", _component("bk", i, a, c))


def optimized_seed_sequence(i: Word, b: int, c: CartanMatrix) -> list[int]:
    """Mutation vertices ``v_{b,1}, ..., v_{b,m_b-1}`` making ``v_{b,0}`` optimized."""
    w = ReducedWord(i, c)
    return list(w.occurrences[b][1:w.m(b)])


def ghkk_component_via_mutation(i: Sequence[int], a: int, c: CartanMatrix) -> PotentialComponent:
    """``W_a`` read off an optimized seed and pulled back along the X-mutations.

    Raises ``AssertionError`` if the mutated seed is not optimized for the vertex.
    """
    i = require_longest(i, c)
    _check_divisor(a, c)
    vs = cluster_vars(c.rank, len(i))
    if a > 0:
        j = _aux(i, a, c)
        top = PosRat.var(vs, x(len(j))).inv()
        expr = carry_cluster(top, "X", i, j, c)
        return PotentialComponent(i, a, "ghkk", expr)
    seed = seed_from_word(i, c)
    maps = []
    for v in optimized_seed_sequence(i, -a, c):
        maps.append(x_mutation(seed, v))
        seed = mutate_seed(seed, v)
    bad = [v for v in seed.mutable if seed.eps(a, v) > 0]
    if bad:
        raise AssertionError(f"seed not optimized for v{a}: arrows to mutable vertices {bad}")
    expr = pullback(PosRat.var(vs, x(a)).inv(), maps)
    return PotentialComponent(i, a, "ghkk", expr)


def total(kind: str, i: Sequence[int], c: CartanMatrix) -> PosRat:
    """``W`` (kind ``"W"``/``"ghkk"``) or ``f^B`` (kind ``"fB"``/``"bk"``) on the chart of ``i``."""
    kind = {"W": "ghkk", "fB": "bk"}.get(kind, kind)
    if kind not in ("ghkk", "bk"):
        raise ValueError(f"unknown potential kind {kind!r}")
    i = require_longest(i, c)
    out = PosRat.const(cluster_vars(c.rank, len(i)), 0)
    for a in list(range(-c.rank, 0)) + list(c.nodes):
        out = out + _component(kind, i, a, c)
    return out

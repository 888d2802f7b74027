"""Seeds and quivers of reduced words, mutation, and cluster chart transitions.

The skew form is stored in full, frozen-frozen entries included; they are only
hidden when a quiver is displayed.  ``eps(k, l) > 0`` means ``eps(k, l)``
arrows ``k -> l``.

Mutation conventions (checked against the rank-2 examples):

* A-side: ``A'_k = (prod_{eps(j,k)>0} A_j^eps(j,k) + prod_{eps(j,k)<0} A_j^-eps(j,k)) / A_k``.
* X-side: ``X'_k = 1/X_k`` and
  ``X'_l = X_l (1 + X_k^(-sgn eps(l,k)))^(-eps(l,k))`` for ``l != k``.

A 3-move with middle position ``k`` is realised by mutating at vertex ``k-1``
and relabelling by the transposition ``(k, k+1)``; a 2-move at ``k`` is the
relabelling alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .cartan import CartanMatrix, Move, ReducedWord, Word, move_apply, move_path, require_longest
from .coords import cluster_vars, x
from .errors import FrozenVertexError
from .posrat import PosRat, RationalMap, VarSet, compose_all, pullback


@dataclass(frozen=True)
class Seed:
    indices: tuple[int, ...]
    frozen: frozenset[int]
    form: tuple[tuple[int, ...], ...]
    origin: str = "word"

    @property
    def position(self) -> dict[int, int]:
        return {k: p for p, k in enumerate(self.indices)}

    def eps(self, k: int, l: int) -> int:
        pos = self.position
        return self.form[pos[k]][pos[l]]

    @property
    def mutable(self) -> tuple[int, ...]:
        return tuple(k for k in self.indices if k not in self.frozen)

    def arrows(self) -> list[tuple[int, int, int]]:
        """Quiver arrows ``(source, target, multiplicity)``; frozen-frozen pairs omitted."""
        out = []
        for k in self.indices:
            for l in self.indices:
                e = self.eps(k, l)
                if e > 0 and not (k in self.frozen and l in self.frozen):
                    out.append((k, l, e))
        return out

    def to_json(self) -> dict:
        return {"indices": list(self.indices), "frozen": sorted(self.frozen),
                "arrows": [list(a) for a in self.arrows()], "origin": self.origin}

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for k in self.indices:
            shape = "box" if k in self.frozen else "circle"
            lines.append(f'  "v{k}" [shape={shape}];')
        for s, t, m in self.arrows():
            label = f' [label="{m}"]' if m > 1 else ""
            lines.append(f'  "v{s}" -> "v{t}"{label};')
        lines.append("}")
        return "\n".join(lines)


def _seed(indices: Sequence[int], frozen: Iterable[int], eps: Mapping[tuple[int, int], int],
          origin: str) -> Seed:
    indices = tuple(indices)
    form = tuple(tuple(eps.get((k, l), 0) for l in indices) for k in indices)
    return Seed(indices, frozenset(frozen), form, origin)


@lru_cache(maxsize=None)
def seed_from_word(i: Word, c: CartanMatrix) -> Seed:
    w = ReducedWord(tuple(i), c)
    N = w.N
    eps: dict[tuple[int, int], int] = {}

    def arrow(s: int, t: int) -> None:
        eps[s, t] = eps.get((s, t), 0) + 1
        eps[t, s] = eps.get((t, s), 0) - 1

    for k in w.indices:
        kp = w.succ[k]
        if kp > N:
            continue
        arrow(k, kp)  # horizontal
        for l in range(max(k, 0) + 1, kp):
            if w.succ[l] > kp and c(w.letter(k), w.letter(l)) < 0:
                arrow(l, k)  # inclined
    return _seed(w.indices, w.frozen, eps, "word")


def quiver_of(seed: Seed) -> list[tuple[int, int, int]]:
    return seed.arrows()


def _require_mutable(seed: Seed, k: int) -> None:
    if k not in seed.indices:
        raise FrozenVertexError(f"{k} is not a vertex")
    if k in seed.frozen:
        raise FrozenVertexError(f"cannot mutate at frozen vertex {k}")


def mutate_seed(seed: Seed, k: int) -> Seed:
    _require_mutable(seed, k)
    eps = {}
    for j in seed.indices:
        for l in seed.indices:
            e = seed.eps(j, l)
            if j == k or l == k:
                e = -e
            else:
                e += max(seed.eps(l, k), 0) * seed.eps(j, k) - max(seed.eps(j, k), 0) * seed.eps(l, k)
            if e:
                eps[j, l] = e
    return _seed(seed.indices, seed.frozen, eps, "mutated")


def relabel_seed(seed: Seed, perm: Mapping[int, int]) -> Seed:
    """Vertex ``v`` becomes ``perm.get(v, v)``; index order is kept."""
    p = lambda v: perm.get(v, v)  # noqa: E731
    eps = {(p(k), p(l)): seed.eps(k, l) for k in seed.indices for l in seed.indices if seed.eps(k, l)}
    return _seed(seed.indices, {p(v) for v in seed.frozen}, eps, seed.origin)


def same_quiver(s1: Seed, s2: Seed) -> bool:
    return s1.frozen == s2.frozen and sorted(s1.arrows()) == sorted(s2.arrows())


# -- cluster transformations ----------------------------------------------

def _vars(seed: Seed) -> VarSet:
    n = sum(1 for k in seed.indices if k < 0)
    return cluster_vars(n, len(seed.indices) - n)


def a_mutation(seed: Seed, k: int) -> RationalMap:
    _require_mutable(seed, k)
    vs = _vars(seed)
    up = {x(j): seed.eps(j, k) for j in seed.indices if seed.eps(j, k) > 0}
    down = {x(j): -seed.eps(j, k) for j in seed.indices if seed.eps(j, k) < 0}
    new = (PosRat.monomial(vs, up) + PosRat.monomial(vs, down)) / PosRat.var(vs, x(k))
    coords = [new if name == x(k) else PosRat.var(vs, name) for name in vs.names]
    return RationalMap(vs, vs, coords)


def x_mutation(seed: Seed, k: int) -> RationalMap:
    _require_mutable(seed, k)
    vs = _vars(seed)
    xk = PosRat.var(vs, x(k))
    coords = []
    for l in seed.indices:
        xl = PosRat.var(vs, x(l))
        e = seed.eps(l, k)
        if l == k:
            coords.append(xk.inv())
        elif e == 0:
            coords.append(xl)
        else:
            sgn = 1 if e > 0 else -1
            coords.append(xl * (1 + xk ** (-sgn)) ** (-e))
    return RationalMap(vs, vs, coords)


def relabel_map(vs: VarSet, perm: Mapping[int, int]) -> RationalMap:
    """Coordinate ``perm(v)`` of the image is coordinate ``v`` of the source."""
    inverse = {t: s for s, t in perm.items()}
    coords = []
    for name in vs.names:
        k = int(name[2:-1])
        coords.append(PosRat.var(vs, x(inverse.get(k, k))))
    return RationalMap(vs, vs, coords)


def move_data(i: Word, move: Move, c: CartanMatrix) -> tuple[int | None, dict[int, int]]:
    """Mutation vertex (``None`` for a 2-move) and relabelling of one move."""
    k = move.position
    perm = {k: k + 1, k + 1: k}
    if move.kind == 2:
        return None, perm
    return k - 1, perm


def _step_seed(i: Word, move: Move, c: CartanMatrix) -> tuple[Word, RationalMap, RationalMap]:
    seed = seed_from_word(i, c)
    j = move_apply(i, move, c)
    vertex, perm = move_data(i, move, c)
    mutated = seed if vertex is None else mutate_seed(seed, vertex)
    image = relabel_seed(mutated, perm)
    target = seed_from_word(j, c)
    if not same_quiver(image, target):
        raise AssertionError(f"move {move} from {list(i)}: relabelled quiver differs from that of {list(j)}")
    vs = _vars(seed)
    rel = relabel_map(vs, perm)
    if vertex is None:
        ident = RationalMap.identity(vs)
        return j, compose_all([ident, rel]), compose_all([ident, rel])
    return j, compose_all([a_mutation(seed, vertex), rel]), compose_all([x_mutation(seed, vertex), rel])


@lru_cache(maxsize=None)
def _move_maps(i: Word, move: Move, c: CartanMatrix) -> tuple[RationalMap, RationalMap]:
    _, a_map, x_map = _step_seed(i, move, c)
    return a_map, x_map


def chart_steps(variety: str, i: Sequence[int], j: Sequence[int], c: CartanMatrix) -> list[RationalMap]:
    """Per-move maps from the cluster chart of ``i`` towards that of ``j``."""
    variety = variety.upper()
    if variety not in ("A", "X"):
        raise ValueError(f"variety must be 'A' or 'X', got {variety!r}")
    i, j = require_longest(i, c), require_longest(j, c)
    steps = []
    word = i
    for m in move_path(i, j, c):
        a_map, x_map = _move_maps(word, m, c)
        steps.append(a_map if variety == "A" else x_map)
        word = move_apply(word, m, c)
    return steps


def chart_transition(variety: str, i: Sequence[int], j: Sequence[int], c: CartanMatrix) -> RationalMap:
    i = require_longest(i, c)
    vs = cluster_vars(c.rank, len(i))
    return compose_all(chart_steps(variety, i, j, c), vs)


def carry_cluster(f: PosRat, variety: str, i: Sequence[int], j: Sequence[int], c: CartanMatrix) -> PosRat:
    """``f`` on the cluster chart of ``j`` -> the same function on the chart of ``i``."""
    return pullback(f, chart_steps(variety, i, j, c))


def mutation_sequence_maps(seed: Seed, vertices: Sequence[int], variety: str = "X") -> tuple[Seed, list[RationalMap]]:
    maps = []
    for v in vertices:
        maps.append(x_mutation(seed, v) if variety.upper() == "X" else a_mutation(seed, v))
        seed = mutate_seed(seed, v)
    return seed, maps

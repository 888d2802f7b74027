"""Lusztig and string transition maps, cone and grading functions, star crystal data.

Convention: ``transition_map(kind, i, j)`` goes from the chart of ``i`` to the
chart of ``j``.  A function ``f`` known on chart ``j`` is carried to chart
``i`` by ``f o transition_map(kind, i, j)``.

Signed families (what the graded cones quantify over, ``a`` in ``-[n] u [n]``):

==========  =====================  =====================
family      index ``-a``           index ``+a``
==========  =====================  =====================
lusztig     ``sum_r x_{a,r}``      ``kappa_a``
string      ``nu_a``               ``zeta_a``
==========  =====================  =====================

The Langlands-dual families swap ``kappa``/``nu`` for ``kappa_dual``/``nu_dual``.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Sequence

from .cartan import CartanMatrix, Move, ReducedWord, Word, move_path, require_longest, word_graph
from .coords import chart_vars, graded_vars, lam, x
from .errors import InvalidWordError
from .posrat import PLMap, PosRat, RationalMap, TropForm, VarSet, compose_all, pullback, trop_map, tropicalize


class TransitionKind(str, Enum):
    LUSZTIG = "lusztig"
    STRING = "string"


CONE_FN_KINDS = ("lusztig_cone", "kappa", "kappa_dual", "zeta", "nu", "nu_dual")


def _step(kind: TransitionKind, move: Move, vs: VarSet) -> RationalMap:
    """One move acting on the ``x[1..N]`` block of ``vs``; other variables fixed."""
    coords = {n: PosRat.var(vs, n) for n in vs.names}
    k = move.position
    if move.kind == 2:
        coords[x(k)], coords[x(k + 1)] = coords[x(k + 1)], coords[x(k)]
    else:
        p, q, r = (PosRat.var(vs, x(k + d)) for d in (-1, 0, 1))
        if kind is TransitionKind.LUSZTIG:
            s = p + r
            new = (q * r / s, s, p * q / s)
        else:
            s = p * r + q
            new = (q * r / s, p * r, s / r)
        for d, f in zip((-1, 0, 1), new):
            coords[x(k + d)] = f
    return RationalMap(vs, vs, [coords[n] for n in vs.names])


def transition_steps(kind, i: Sequence[int], j: Sequence[int], c: CartanMatrix,
                     vs: VarSet | None = None) -> list[RationalMap]:
    kind = TransitionKind(kind)
    i, j = require_longest(i, c), require_longest(j, c)
    vs = vs or chart_vars(len(i))
    return [_step(kind, m, vs) for m in move_path(i, j, c)]


def transition_map(kind, i: Sequence[int], j: Sequence[int], c: CartanMatrix,
                   vs: VarSet | None = None) -> RationalMap:
    vs = vs or chart_vars(len(i))
    return compose_all(transition_steps(kind, i, j, c, vs), vs)


def carry(f: PosRat, kind, i: Sequence[int], j: Sequence[int], c: CartanMatrix) -> PosRat:
    """``f`` on chart ``j`` -> the same function on chart ``i``."""
    return pullback(f, transition_steps(kind, i, j, c, f.varset))


# -- tropical transitions on points ---------------------------------------

def trop_step(kind, move: Move, point: Sequence[int]) -> tuple[int, ...]:
    kind = TransitionKind(kind)
    y = list(point)
    k = move.position
    if move.kind == 2:
        y[k - 1], y[k] = y[k], y[k - 1]
        return tuple(y)
    p, q, r = y[k - 2], y[k - 1], y[k]
    if kind is TransitionKind.LUSZTIG:
        s = min(p, r)
        y[k - 2], y[k - 1], y[k] = q + r - s, s, p + q - s
    else:
        s = min(p + r, q)
        y[k - 2], y[k - 1], y[k] = q + r - s, p + r, s - r
    return tuple(y)


def trop_transition(kind, i: Sequence[int], j: Sequence[int], point: Sequence[int],
                    c: CartanMatrix) -> tuple[int, ...]:
    point = tuple(point)
    for m in move_path(i, j, c):
        point = trop_step(kind, m, point)
    return point


# -- cone / grading functions ---------------------------------------------

def _graded(c: CartanMatrix, N: int) -> VarSet:
    return graded_vars(c.rank, N)


def lusztig_cone_fn(i: Sequence[int], a: int, c: CartanMatrix) -> PosRat:
    w = ReducedWord(tuple(i), c)
    vs = _graded(c, w.N)
    return sum((PosRat.var(vs, x(k)) for k in w.occurrences[a][1:]), PosRat.const(vs, 0))


def _via_word(i: Word, a: int, c: CartanMatrix, via: Sequence[int] | None) -> Word:
    if via is None:
        return word_graph(c).nearest(i, lambda w: w[-1] == a)
    via = require_longest(via, c)
    if via[-1] != a:
        raise InvalidWordError(f"auxiliary word {list(via)} does not end in {a}")
    return via


def kappa(i: Sequence[int], a: int, c: CartanMatrix, *, dual: bool = False,
          via: Sequence[int] | None = None) -> PosRat:
    """Grading function on the graded Lusztig chart, pulled back from a word ending in ``a``."""
    i = require_longest(i, c)
    j = _via_word(i, a, c, via)
    vs = _graded(c, len(i))
    star = c.star
    if dual:
        lam_part = PosRat.monomial(vs, {lam(star[b]): c(a, b) for b in c.nodes})
    else:
        lam_part = PosRat.var(vs, lam(star[a]))
    top = lam_part / PosRat.var(vs, x(len(i)))
    return carry(top, TransitionKind.LUSZTIG, i, j, c)


def zeta(i: Sequence[int], a: int, c: CartanMatrix, *, via: Sequence[int] | None = None) -> PosRat:
    i = require_longest(i, c)
    j = _via_word(i, a, c, via)
    vs = _graded(c, len(i))
    return carry(PosRat.var(vs, x(len(i))), TransitionKind.STRING, i, j, c)


def nu(i: Sequence[int], a: int, c: CartanMatrix, *, dual: bool = False) -> PosRat:
    i = require_longest(i, c)
    vs = _graded(c, len(i))
    N = len(i)
    if dual:
        lam_part = PosRat.monomial(vs, {lam(b): c(a, b) for b in c.nodes})
    else:
        lam_part = PosRat.var(vs, lam(a))
    total = PosRat.const(vs, 0)
    for k in range(1, N + 1):
        if i[k - 1] != a:
            continue
        exps = {x(k): -1}
        for l in range(k + 1, N + 1):
            exps[x(l)] = exps.get(x(l), 0) - c(i[l - 1], a)
        total = total + PosRat.monomial(vs, exps)
    return lam_part * total


def cone_fn(i: Sequence[int], a: int, kind: str, c: CartanMatrix) -> PosRat:
    """One of the six function families, over the graded chart ``(l, x)``."""
    if kind == "lusztig_cone":
        return lusztig_cone_fn(i, a, c)
    if kind == "kappa":
        return kappa(i, a, c)
    if kind == "kappa_dual":
        return kappa(i, a, c, dual=True)
    if kind == "zeta":
        return zeta(i, a, c)
    if kind == "nu":
        return nu(i, a, c)
    if kind == "nu_dual":
        return nu(i, a, c, dual=True)
    raise ValueError(f"unknown cone function kind {kind!r}; expected one of {CONE_FN_KINDS}")


def family_fn(family: str, i: Sequence[int], a: int, c: CartanMatrix) -> PosRat:
    """Signed family member; ``family`` in lusztig, lusztig_dual, string, string_dual."""
    if a == 0 or abs(a) > c.rank:
        raise ValueError(f"divisor index {a} out of range")
    dual = family.endswith("_dual")
    if family.startswith("lusztig"):
        if a < 0:
            return lusztig_cone_fn(i, -a, c)
        return kappa(i, a, c, dual=dual)
    if family.startswith("string"):
        if a < 0:
            return nu(i, -a, c, dual=dual)
        return zeta(i, a, c)
    raise ValueError(f"unknown family {family!r}")


# -- free crystal on string data ------------------------------------------

def _nu_values(i: Sequence[int], x_: Sequence[int], c: CartanMatrix) -> list[int]:
    N = len(i)
    return [x_[k] + sum(c(i[k], i[l]) * x_[l] for l in range(k + 1, N)) for k in range(N)]


def crystal_eps_star(i: Sequence[int], a: int, x_: Sequence[int], c: CartanMatrix) -> int:
    if a not in i:
        raise ValueError(f"letter {a} does not occur in {list(i)}")
    vals = _nu_values(i, x_, c)
    return max(v for v, b in zip(vals, i) if b == a)


def crystal_f_star(i: Sequence[int], a: int, x_: Sequence[int], c: CartanMatrix) -> tuple[int, ...]:
    vals = _nu_values(i, x_, c)
    top = crystal_eps_star(i, a, x_, c)
    k = next(k for k, (v, b) in enumerate(zip(vals, i)) if b == a and v == top)
    out = list(x_)
    out[k] += 1
    return tuple(out)


# -- Kashiwara involution on Lusztig data ---------------------------------

def star_word(i: Sequence[int], c: CartanMatrix) -> Word:
    """``(i_N*, ..., i_1*)``."""
    return tuple(c.star[a] for a in reversed(i))


def _reversal(N: int) -> RationalMap:
    vs = chart_vars(N)
    return RationalMap(vs, vs, [PosRat.var(vs, x(N + 1 - k)) for k in range(1, N + 1)])


@lru_cache(maxsize=None)
def kashiwara_star(i: Word, c: CartanMatrix) -> PLMap:
    """Tropicalisation of: reverse coordinates, then Lusztig transition from ``i*`` to ``i``."""
    i = require_longest(i, c)
    rational = compose_all([_reversal(len(i))] + transition_steps(TransitionKind.LUSZTIG, star_word(i, c), i, c))
    return trop_map(rational)


def kashiwara_star_point(i: Sequence[int], x_: Sequence[int], c: CartanMatrix) -> tuple[int, ...]:
    """Same map evaluated move by move with tropical formulas."""
    i = require_longest(i, c)
    return trop_transition(TransitionKind.LUSZTIG, star_word(i, c), i, tuple(reversed(x_)), c)


def lusztig_eps(i: Sequence[int], a: int, x_: Sequence[int], c: CartanMatrix) -> int:
    """``eps_a`` of a Lusztig datum: first coordinate in a chart whose word starts with ``a``."""
    i = require_longest(i, c)
    j = word_graph(c).nearest(i, lambda w: w[0] == a)
    return trop_transition(TransitionKind.LUSZTIG, i, j, x_, c)[0]


def lusztig_eps_star(i: Sequence[int], a: int, x_: Sequence[int], c: CartanMatrix) -> int:
    return lusztig_eps(i, a, kashiwara_star_point(i, x_, c), c)


@lru_cache(maxsize=None)
def _zeta_forms(i: Word, c: CartanMatrix) -> tuple[TropForm, ...]:
    return tuple(tropicalize(zeta(i, a, c)) for a in c.nodes)


def in_string_cone(i: Sequence[int], x_: Sequence[int], c: CartanMatrix) -> bool:
    """``trop zeta_a >= 0`` for every ``a`` (the ungraded string cone)."""
    point = (0,) * c.rank + tuple(x_)
    return all(t(point) >= 0 for t in _zeta_forms(tuple(i), c))


def move_between(i: Sequence[int], j: Sequence[int], c: CartanMatrix) -> Move:
    """The single move from ``i`` to ``j`` (they must be adjacent)."""
    for m in word_graph(c).neighbours(tuple(i)):
        if m[1] == tuple(j):
            return m[0]
    raise InvalidWordError(f"{list(i)} and {list(j)} differ by more than one move")


__all__ = [
    "TransitionKind", "transition_map", "transition_steps", "carry", "trop_transition",
    "cone_fn", "family_fn", "kappa", "zeta", "nu", "lusztig_cone_fn",
    "crystal_eps_star", "crystal_f_star", "kashiwara_star", "kashiwara_star_point",
    "lusztig_eps", "lusztig_eps_star", "star_word", "in_string_cone", "move_between",
]

"""Battery of exact identity checks, grouped into named suites.

Every check returns a list of :class:`Check` results; a suite passes when all
of its checks do.  ``verify --suite all`` on the CLI runs every suite.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

import networkx as nx

from .cartan import CartanMatrix, Word, reduced_words, weyl_dim, word_graph
from .cluster import chart_transition, same_quiver, mutate_seed, relabel_seed, seed_from_word, move_data
from .cones import (CHART_KINDS, build_cone, chart_map, chart_matrix, cmm_composed, cmm_map, phi_chart,
                    phi_prime, polytope_points)
from .linalg import det
from .polyhedral import cone_extreme_rays, cones_equal, transform_cone
from .posrat import RationalMap, compose, pullback, substitute
from .potentials import _component, ghkk_component_via_mutation, total
from .transitions import (_step, crystal_f_star, family_fn, in_string_cone, kashiwara_star,
                          kashiwara_star_point, lusztig_eps_star, TransitionKind)
from .coords import chart_vars


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def _signed(c: CartanMatrix) -> list[int]:
    return [-a for a in c.nodes] + list(c.nodes)


def _words(c: CartanMatrix, limit: int | None) -> list[Word]:
    ws = reduced_words(c)
    if limit is None or limit >= len(ws):
        return ws
    # canonical word first, then an even spread over the sorted list
    picks = [c.longest_word] + [ws[(k * len(ws)) // limit] for k in range(1, limit)]
    out = []
    for w in picks:
        if w not in out:
            out.append(w)
    return out


# -- individual batteries -------------------------------------------------

def potential_identities(c: CartanMatrix, words: Iterable[Word]) -> list[Check]:
    """``W o gr_iota_star``, ``f^B`` vs ``gr_CA``, ``W o gr_CA_star`` and ``f^B`` vs ``gr_iota``."""
    out = []
    for w in words:
        maps = {k: chart_map(w, k, c) for k in CHART_KINDS}
        for a in _signed(c):
            W, B = _component("ghkk", w, a, c), _component("bk", w, a, c)
            pairs = {
                "lusztig=W.gr_iota_star": (family_fn("lusztig", w, a, c), substitute(W, maps["gr_iota_star"])),
                "fB=lusztig_dual.gr_CA": (B, substitute(family_fn("lusztig_dual", w, a, c), maps["gr_CA"])),
                "string=W.gr_CA_star": (family_fn("string", w, a, c), substitute(W, maps["gr_CA_star"])),
                "fB=string_dual.gr_iota": (B, substitute(family_fn("string_dual", w, a, c), maps["gr_iota"])),
            }
            for name, (lhs, rhs) in pairs.items():
                out.append(Check("identities", f"{name} {list(w)} a={a}", lhs.equals(rhs)))
    return out


def unimodularity(c: CartanMatrix, words: Iterable[Word]) -> list[Check]:
    out = []
    for w in words:
        for k in CHART_KINDS:
            d = det(chart_matrix(w, k, c))
            out.append(Check("unicones", f"det {k} {list(w)}", abs(d) == 1, f"det={d}"))
    return out


def cmm_checks(c: CartanMatrix, words: Iterable[Word], rays: bool = True) -> list[Check]:
    out = []
    for w in words:
        for dual in (False, True):
            closed = cmm_map(w, c, dual)
            same = [list(r) for r in closed.matrix] == cmm_composed(w, c, dual)
            out.append(Check("cmm", f"closed=composed dual={dual} {list(w)}", same))
            out.append(Check("cmm", f"det dual={dual} {list(w)}", abs(closed.det()) == 1))
        if rays:
            m = cmm_map(w, c)
            src = {m(r) for r in cone_extreme_rays(build_cone(w, "graded_string", c))}
            dst = set(cone_extreme_rays(build_cone(w, "graded_lusztig", c)))
            out.append(Check("cmm", f"rays string->lusztig {list(w)}", src == dst,
                             f"{len(src)} vs {len(dst)} rays"))
    return out


def cone_equalities(c: CartanMatrix, words: Iterable[Word]) -> list[Check]:
    out = []
    for w in words:
        cone = {k: build_cone(w, k, c) for k in ("graded_lusztig", "graded_string", "graded_lusztig_dual",
                                                  "graded_string_dual", "ghkk", "bk")}
        m = {k: chart_matrix(w, k, c) for k in CHART_KINDS}
        statements = {
            "gr_iota_star(graded_lusztig)=ghkk": (transform_cone(cone["graded_lusztig"], m["gr_iota_star"]), cone["ghkk"]),
            "gr_CA_star(graded_string)=ghkk": (transform_cone(cone["graded_string"], m["gr_CA_star"]), cone["ghkk"]),
            "gr_CA(bk)=graded_lusztig_dual": (transform_cone(cone["bk"], m["gr_CA"]), cone["graded_lusztig_dual"]),
            "gr_iota(bk)=graded_string_dual": (transform_cone(cone["bk"], m["gr_iota"]), cone["graded_string_dual"]),
            "graded_string explicit=nu route": (build_cone(w, "graded_string", c, route="explicit"), cone["graded_string"]),
        }
        for name, (c1, c2) in statements.items():
            out.append(Check("cones", f"{name} {list(w)}", cones_equal(c1, c2)))
    return out


def optimized_seeds(c: CartanMatrix, words: Iterable[Word]) -> list[Check]:
    out = []
    for w in words:
        for a in range(-c.rank, 0):
            try:
                got = ghkk_component_via_mutation(w, a, c).expression
                ok, detail = got.equals(_component("ghkk", w, a, c)), ""
            except AssertionError as exc:
                ok, detail = False, str(exc)
            out.append(Check("ghkk-mutation", f"W_{a} {list(w)}", ok, detail))
    return out


def polytope_counts(c: CartanMatrix, words: Iterable[Word], weights: Iterable[Sequence[int]]) -> list[Check]:
    out = []
    weights = [tuple(v) for v in weights]
    for w in words:
        for lam in weights:
            want = weyl_dim(c, lam)
            for kind in ("string", "lusztig"):
                got = len(polytope_points(w, kind, lam, c))
                out.append(Check("polytopes", f"{kind} {list(w)} weight={list(lam)}", got == want,
                                 f"{got} points, dim {want}"))
    return out


def default_weights(c: CartanMatrix) -> list[tuple[int, ...]]:
    n = c.rank
    if n <= 2:
        return list(product(range(3), repeat=n))
    fundamental = [tuple(int(a == b) for b in range(n)) for a in range(n)]
    return [(0,) * n] + fundamental + [(1,) * n]


def crystal_points(c: CartanMatrix, w: Word, samples: int | None, box: int = 3, seed: int = 0) -> list[tuple[int, ...]]:
    N = len(w)
    if samples is None:
        return list(product(range(box + 1), repeat=N))
    rng = random.Random(seed)
    return [tuple(rng.randint(0, box) for _ in range(N)) for _ in range(samples)]


def crystal_checks(c: CartanMatrix, words: Iterable[Word], samples: int | None = None,
                   box: int = 3) -> list[Check]:
    """Star identity ``eps*_{i_N*}(x) = x_N`` on Lusztig data and ``f*``-stability of string cones."""
    out = []
    for w in words:
        a = c.star[w[-1]]
        pts = crystal_points(c, w, samples, box)
        pl = kashiwara_star(w, c)
        bad = [p for p in pts if lusztig_eps_star(w, a, p, c) != p[-1]]
        out.append(Check("crystal", f"eps* identity {list(w)}", not bad, f"{len(pts)} points; failures {bad[:3]}"))
        bad = [p for p in pts if pl(p) != kashiwara_star_point(w, p, c)
               or kashiwara_star_point(w, kashiwara_star_point(w, p, c), c) != p]
        out.append(Check("crystal", f"star involution {list(w)}", not bad, f"failures {bad[:3]}"))
        if samples is None:
            cone_pts = [p for p in pts if in_string_cone(w, p, c)]
        else:
            cone_pts = sample_string_cone(c, w, samples, box)
        bad = [(p, b) for p in cone_pts for b in c.nodes if not in_string_cone(w, crystal_f_star(w, b, p, c), c)]
        out.append(Check("crystal", f"f* stability {list(w)}", not bad and bool(cone_pts),
                         f"{len(cone_pts)} cone points; failures {bad[:3]}"))
    return out


def sample_string_cone(c: CartanMatrix, w: Word, count: int, box: int, seed: int = 0) -> list[tuple[int, ...]]:
    """``count`` distinct string-cone points from the box ``[0, box]^N`` (rejection sampling)."""
    rng = random.Random(seed)
    seen: list[tuple[int, ...]] = []
    found = set()
    tries = 0
    while len(seen) < count and tries < 200 * count:
        tries += 1
        p = tuple(rng.randint(0, box) for _ in w)
        if p not in found and in_string_cone(w, p, c):
            found.add(p)
            seen.append(p)
    return seen


def phi_checks(c: CartanMatrix, words: Iterable[Word], covariance: bool = True) -> list[Check]:
    out = []
    words = list(words)
    for w in words:
        p = phi_chart(w, c)
        out.append(Check("phi", f"phi=phi' {list(w)}", p.equals(phi_prime(w, c))))
        lhs, rhs = total("fB", w, c), substitute(total("W", w, c), p)
        out.append(Check("phi", f"fB=W.phi {list(w)}", lhs.equals(rhs)))
    if covariance:
        for w in words[:1]:
            g = word_graph(c)
            move, j = next((m, v) for m, v in g.neighbours(w) if m.kind == 3)
            left = compose(phi_chart(j, c), chart_transition("A", w, j, c))
            right = compose(chart_transition("X", w, j, c), phi_chart(w, c))
            out.append(Check("phi", f"covariance {list(w)} -> {list(j)}", left.equals(right)))
    return out


def braid_checks(c: CartanMatrix, words: Iterable[Word]) -> list[Check]:
    out = []
    for w in words:
        for m, j in word_graph(c).neighbours(w):
            vertex, perm = move_data(w, m, c)
            s = seed_from_word(w, c)
            image = relabel_seed(s if vertex is None else mutate_seed(s, vertex), perm)
            out.append(Check("braid", f"{list(w)} move {m.kind}@{m.position}", same_quiver(image, seed_from_word(j, c))))
    return out


def move_graph(c: CartanMatrix) -> nx.Graph:
    g = nx.Graph()
    wg = word_graph(c)
    for w in reduced_words(c):
        for m, v in wg.neighbours(w):
            g.add_edge(w, v)
    return g


def _edge_step(kind: TransitionKind, u: Word, v: Word, c: CartanMatrix) -> RationalMap:
    vs = chart_vars(len(u))
    for m, t in word_graph(c).neighbours(u):
        if t == v:
            return _step(kind, m, vs)
    raise ValueError(f"{u} and {v} are not adjacent")


def cycle_checks(c: CartanMatrix, max_len: int = 6) -> list[Check]:
    """Every cycle of the move graph up to ``max_len`` edges composes to the identity."""
    g = move_graph(c)
    cycles = [[u, v] for u, v in g.edges()] + [list(cy) for cy in nx.simple_cycles(g, length_bound=max_len)]
    out = []
    for kind in TransitionKind:
        bad = []
        for cy in cycles:
            closed = cy + [cy[0]]
            steps = [_edge_step(kind, closed[t], closed[t + 1], c) for t in range(len(cy))]
            vs = chart_vars(len(cy[0]))
            ok = all(pullback(f, steps).equals(f) for f in (RationalMap.identity(vs).coords))
            if not ok:
                bad.append(cy)
        out.append(Check("transitions", f"{kind.value} cycles <= {max_len}", not bad,
                         f"{len(cycles)} cycles; failures {len(bad)}"))
    return out


# -- suites ---------------------------------------------------------------

def _example_checks(c: CartanMatrix) -> list[Check]:
    from .reference import example_pack_checks
    return example_pack_checks() if c.type_label == "A2" else []


def _limit(c: CartanMatrix) -> int | None:
    return None if c.num_positive_roots <= 6 else 3


SUITES: dict[str, Callable[[CartanMatrix], list[Check]]] = {
    "examples": _example_checks,
    "identities": lambda c: potential_identities(c, _words(c, _limit(c))),
    "unicones": lambda c: unimodularity(c, _words(c, _limit(c))),
    "cmm": lambda c: cmm_checks(c, _words(c, _limit(c))),
    "cones": lambda c: cone_equalities(c, _words(c, _limit(c))),
    "ghkk-mutation": lambda c: optimized_seeds(c, _words(c, _limit(c))),
    "braid": lambda c: braid_checks(c, _words(c, _limit(c))),
    "polytopes": lambda c: polytope_counts(c, _words(c, 2), default_weights(c)),
    "crystal": lambda c: crystal_checks(c, _words(c, 2), None if c.num_positive_roots <= 3 else 500),
    "theorem-a": lambda c: phi_checks(c, _words(c, _limit(c))),
    "transitions": lambda c: cycle_checks(c) if c.num_positive_roots <= 6 else [],
}


def run_suite(name: str, c: CartanMatrix) -> tuple[list[Check], float]:
    start = time.perf_counter()
    if name == "all":
        checks = [ch for key in SUITES for ch in SUITES[key](c)]
    elif name in SUITES:
        checks = SUITES[name](c)
    else:
        raise ValueError(f"unknown suite {name!r}; expected 'all' or one of {sorted(SUITES)}")
    return checks, time.perf_counter() - start


__all__ = ["Check", "SUITES", "run_suite", "potential_identities", "unimodularity", "cmm_checks",
           "cone_equalities", "optimized_seeds", "polytope_counts", "crystal_checks", "phi_checks",
           "braid_checks", "cycle_checks", "move_graph", "default_weights", "sample_string_cone"]

"""Hand-written reference data for type A2 with the word (1, 2, 1).

Expressions are kept as strings in the notation of the parser so that they can
be compared against computed values both by exact equality and by their
normalised printed form.
"""
from __future__ import annotations

from .cartan import cartan
from .cluster import seed_from_word
from .cones import chart_map
from .coords import cluster_vars, graded_vars
from .posrat import PosRat
from .potentials import bk_component, ghkk_component

WORD = (1, 2, 1)

QUIVER = {(-1, 1, 1), (1, 3, 1), (2, 1, 1), (1, -2, 1)}
FROZEN = {-1, -2, 2, 3}

GHKK = {
    -1: "x[-1]^-1 + x[-1]^-1*x[1]^-1",
    1: "x[3]^-1",
    -2: "x[-2]^-1",
    2: "x[2]^-1 + x[1]^-1*x[2]^-1",
}

BK = {
    -1: "x[-2]/(x[-1]*x[1]) + x[2]/(x[1]*x[3])",
    1: "x[1]/x[3]",
    -2: "x[1]/(x[-2]*x[2])",
    2: "x[-1]/x[1] + x[-2]*x[3]/(x[1]*x[2])",
}

# source variables, target coordinates in order
CHARTS = {
    "gr_iota_star": ("graded", ["1/x[1]", "1/x[2]", "x[1]/x[3]", "x[2]/l[1]", "x[3]/l[2]"]),
    "gr_CA": ("cluster", ["1/x[2]", "1/x[3]", "x[-2]/(x[-1]*x[1])", "x[1]/(x[-2]*x[2])", "x[2]/(x[1]*x[3])"]),
    "gr_CA_star": ("graded", ["x[1]*x[3]^2/(l[1]*x[2])", "x[2]/(l[2]*x[3])", "x[2]/(x[1]*x[3])", "x[3]/x[2]", "1/x[3]"]),
    "gr_iota": ("cluster", ["1/x[3]", "1/x[2]", "x[-1]/x[1]", "x[-2]/x[2]", "x[1]/x[3]"]),
}


def _same(expected: PosRat, got: PosRat) -> bool:
    return expected.equals(got) and str(expected) == str(got)


def example_pack_checks():
    from .verify import Check
    c = cartan("A2")
    cv, gv = cluster_vars(2, 3), graded_vars(2, 3)
    out = []
    seed = seed_from_word(WORD, c)
    out.append(Check("examples", "quiver", set(seed.arrows()) == QUIVER and set(seed.frozen) == FROZEN,
                     str(seed.arrows())))
    for a, text in GHKK.items():
        got = ghkk_component(WORD, a, c).expression
        out.append(Check("examples", f"W_{a}", _same(PosRat.parse(cv, text), got), str(got)))
    for a, text in BK.items():
        got = bk_component(WORD, a, c).expression
        out.append(Check("examples", f"fB_{a}", _same(PosRat.parse(cv, text), got), str(got)))
    for kind, (src, coords) in CHARTS.items():
        vs = gv if src == "graded" else cv
        m = chart_map(WORD, kind, c)
        ok = all(_same(PosRat.parse(vs, t), f) for t, f in zip(coords, m.coords))
        out.append(Check("examples", f"chart {kind}", ok and len(coords) == len(m.coords), str(m)))
    return out

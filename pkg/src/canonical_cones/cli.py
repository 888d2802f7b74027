"""Command-line interface: ``canonical-cones <command> --type A2 --word 1,2,1 ...``.

Output is JSON with sorted keys (``--format text`` gives a human-readable
rendering where one exists).  Errors print a JSON object to stderr and exit
with 1 (bad usage), 2 (invalid word) or 3 (dimension cap).
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Any, Sequence

from .cartan import CartanMatrix, cartan, convex_order, move_path, parse_word, reduced_words, require_longest, weyl_dim
from .cluster import mutate_seed, seed_from_word
from .cones import CHART_KINDS, CONE_KINDS, build_cone, chart_map, cmm_map, phi_chart, phi_prime, polytope_points
from .errors import CanonicalConesError
from .polyhedral import check_dim, double_description
from .posrat import substitute, trop_map, tropicalize
from .potentials import bk_component, ghkk_component, ghkk_component_via_mutation, total
from .transitions import trop_transition, transition_map
from .verify import SUITES, run_suite

log = logging.getLogger("canonical_cones")

SAFE_INT = 2 ** 53


class UsageError(CanonicalConesError):
    exit_code = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which is reserved for bad words
        raise UsageError(message)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if hasattr(obj, "to_json"):
        return _jsonable(obj.to_json())
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2)


def _ints(text: str) -> tuple[int, ...]:
    return parse_word(text)


def _context(args) -> tuple[CartanMatrix, tuple[int, ...]]:
    c = cartan(args.type)
    word = c.longest_word if getattr(args, "word", None) is None else require_longest(parse_word(args.word), c)
    return c, word


# -- commands -------------------------------------------------------------

def cmd_cartan(args):
    c = cartan(args.type)
    return {"type": c.type_label, "rank": c.rank, "matrix": [list(r) for r in c.entries],
            "star": {str(a): b for a, b in c.star.items()}, "positive_roots": [list(r) for r in c.positive_roots],
            "N": c.num_positive_roots, "longest_word": list(c.longest_word)}, None


def cmd_words(args):
    c, w = _context(args)
    if args.to:
        target = require_longest(parse_word(args.to), c)
        path = move_path(w, target, c)
        return {"source": list(w), "target": list(target), "moves": [m.to_json() for m in path]}, None
    ws = reduced_words(c)
    if args.count:
        return {"type": c.type_label, "count": len(ws)}, str(len(ws))
    out = {"type": c.type_label, "count": len(ws), "words": [list(v) for v in ws]}
    if args.roots:
        out["convex_order"] = [list(r) for r in convex_order(w, c)]
    return out, "\n".join(",".join(map(str, v)) for v in ws)


def cmd_transition(args):
    c, i = _context(args)
    j = require_longest(parse_word(args.to), c)
    m = transition_map(args.kind, i, j, c)
    out = {"kind": args.kind, "source": list(i), "target": list(j), "map": m.to_json(), "formula": str(m)}
    if args.point:
        out["trop_image"] = list(trop_transition(args.kind, i, j, _ints(args.point), c))
    if args.trop:
        out["trop"] = trop_map(m).to_json()
    return out, str(m)


def cmd_quiver(args):
    c, i = _context(args)
    seed = seed_from_word(i, c)
    return {"word": list(i), "seed": seed.to_json()}, seed.to_dot()


def cmd_mutate(args):
    c, i = _context(args)
    seed = seed_from_word(i, c)
    for v in args.vertex:
        seed = mutate_seed(seed, v)
    return {"word": list(i), "vertices": args.vertex, "seed": seed.to_json()}, seed.to_dot()


def _component_json(comp, extra=None):
    out = comp.to_json()
    out.update(extra or {})
    return out, str(comp.expression)


def cmd_potential(args, kind=None):
    c, i = _context(args)
    kind = kind or args.kind
    if args.divisor is None:
        f = total("ghkk" if kind == "ghkk" else "bk", i, c)
        return {"word": list(i), "kind": kind, "divisor": "total", "expression": str(f),
                "posrat": f.to_json(), "trop": tropicalize(f).to_json()}, str(f)
    if kind == "ghkk":
        comp = ghkk_component_via_mutation(i, args.divisor, c) if args.via_mutation else ghkk_component(i, args.divisor, c)
    else:
        comp = bk_component(i, args.divisor, c)
    return _component_json(comp)


def cmd_decoration(args):
    return cmd_potential(args, kind="bk")


def cmd_chart(args):
    c, i = _context(args)
    m = chart_map(i, args.kind, c)
    return {"word": list(i), "kind": args.kind, "map": m.to_json(), "matrix": m.matrix(),
            "formula": str(m)}, str(m)


def cmd_cone(args):
    c, i = _context(args)
    if args.rays:
        check_dim(c.rank + len(i))  # fail before the cone is built
    cone = build_cone(i, args.kind, c, route=args.route)
    out = {"word": list(i), "kind": args.kind, "cone": cone.to_json()}
    if args.rays:
        v = double_description(cone)
        out["rays"] = [list(r) for r in v.rays]
        out["lineality"] = [list(r) for r in v.lineality]
    if args.cmm:
        out["cmm"] = cmm_map(i, c, dual=args.kind.endswith("_dual")).to_json()
    return out, cone.hrep()


def cmd_polytope(args):
    c, i = _context(args)
    weight = _ints(args.weight)
    pts = polytope_points(i, args.kind, weight, c)
    if args.count:
        return {"count": len(pts), "weyl_dim": weyl_dim(c, weight)}, str(len(pts))
    return {"word": list(i), "kind": args.kind, "weight": list(weight), "count": len(pts),
            "points": [list(p) for p in pts]}, "\n".join(" ".join(map(str, p)) for p in pts)


def cmd_phi(args):
    c, i = _context(args)
    p = phi_chart(i, c)
    same = p.equals(phi_prime(i, c))
    identity = total("bk", i, c).equals(substitute(total("ghkk", i, c), p))
    out = {"word": list(i), "phi": p.to_json(), "matrix": p.matrix(), "phi_equals_phi_prime": same,
           "fB_equals_W_after_phi": identity}
    return out, f"{p}\nphi = phi': {same}\nfB = W o phi: {identity}"


def cmd_verify(args):
    c = cartan(args.type)
    checks, seconds = run_suite(args.suite, c)
    passed = all(ch.passed for ch in checks)
    out = {"type": c.type_label, "suite": args.suite, "passed": passed, "checks": len(checks),
           "failures": [ch.to_json() for ch in checks if not ch.passed], "seconds": round(seconds, 3)}
    if args.details:
        out["results"] = [ch.to_json() for ch in checks]
    lines = [f"{'PASS' if ch.passed else 'FAIL'} {ch.suite}: {ch.name}" for ch in checks]
    lines.append(f"{'pass' if passed else 'fail'}: {len(checks)} checks")
    return out, "\n".join(lines), (0 if passed else 1)


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="canonical-cones", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, word=True, fmt=("json", "text")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--type", default="A2", help="Cartan type, e.g. A2, A3, D4")
        if word:
            s.add_argument("--word", help="reduced word of w0, e.g. 1,2,1 (default: lexicographically least)")
        s.add_argument("--format", choices=fmt, default="json")
        s.set_defaults(func=fn)
        return s

    add("cartan", cmd_cartan, "Cartan matrix, star involution and positive roots", word=False)
    s = add("words", cmd_words, "reduced words of w0 and move paths")
    s.add_argument("--to", help="print a move path from --word to this word")
    s.add_argument("--count", action="store_true")
    s.add_argument("--roots", action="store_true", help="include the convex order of --word")
    s = add("transition", cmd_transition, "Lusztig or string transition map")
    s.add_argument("--kind", choices=("lusztig", "string"), default="lusztig")
    s.add_argument("--to", required=True)
    s.add_argument("--point", help="integer point for the tropical transition")
    s.add_argument("--trop", action="store_true", help="include the piecewise-linear map")
    add("quiver", cmd_quiver, "seed and quiver of a reduced word", fmt=("json", "text", "dot"))
    s = add("mutate", cmd_mutate, "mutate the seed of a word", fmt=("json", "text", "dot"))
    s.add_argument("--vertex", type=int, action="append", required=True)
    s = add("potential", cmd_potential, "GHKK potential or BK decoration components")
    s.add_argument("--kind", choices=("ghkk", "bk"), default="ghkk")
    s.add_argument("--divisor", type=int, help="index in -[n] u [n]; omit for the total")
    s.add_argument("--via-mutation", action="store_true", help="GHKK only: use the optimized-seed algorithm")
    s = add("decoration", cmd_decoration, "BK decoration components")
    s.add_argument("--divisor", type=int)
    s.set_defaults(via_mutation=False)
    s = add("chart", cmd_chart, "graded chart maps")
    s.add_argument("--kind", choices=CHART_KINDS, required=True)
    s = add("cone", cmd_cone, "H-description of a cone", fmt=("json", "hrep", "text"))
    s.add_argument("--kind", choices=CONE_KINDS, required=True)
    s.add_argument("--route", choices=("functions", "explicit"), default="functions")
    s.add_argument("--rays", action="store_true", help="add extreme rays (double description)")
    s.add_argument("--cmm", action="store_true", help="add the unimodular string -> Lusztig map")
    s = add("polytope", cmd_polytope, "lattice points of a weight polytope")
    s.add_argument("--kind", choices=("string", "lusztig"), default="string")
    s.add_argument("--weight", required=True, help="fundamental-weight coordinates, e.g. 1,1")
    s.add_argument("--count", action="store_true")
    add("phi", cmd_phi, "the map phi and its defining identities")
    s = add("verify", cmd_verify, "run a verification suite", word=False)
    s.add_argument("--suite", default="all", choices=("all",) + tuple(SUITES))
    s.add_argument("--details", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    level = os.environ.get("CANONICAL_CONES_VERBOSE")
    logging.basicConfig(level=logging.DEBUG if level else logging.WARNING)
    try:
        args = build_parser().parse_args(argv)
        log.debug("dispatching %s", args.command)
        result = args.func(args)
        payload, text = result[0], result[1]
        code = result[2] if len(result) > 2 else 0
        if args.format == "json" or text is None:
            print(dumps(payload))
        else:
            print(text)
        return code
    except CanonicalConesError as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

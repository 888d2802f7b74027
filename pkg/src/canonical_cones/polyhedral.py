"""Exact polyhedral cones: H-descriptions, double description, lattice maps.

A :class:`ConeH` is ``{v : <r, v> >= 0 for every row r}``.  Extreme rays are
computed by the double description method on integer vectors, after splitting
off the lineality space, so the result is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, ceil
from typing import Iterable, Sequence

from .errors import DimensionCapError, InfeasibleError, UnboundedError
from .linalg import det, inverse, matmul, matvec, nullspace, primitive, rank

MAX_DIM = 16

Vec = tuple[int, ...]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def normalize_rows(rows: Iterable[Sequence]) -> tuple[Vec, ...]:
    """Primitive, deduplicated, sorted; zero rows dropped."""
    return tuple(sorted({primitive(r) for r in rows if any(r)}))


@dataclass(frozen=True)
class ConeH:
    dim: int
    rows: tuple[Vec, ...]
    coords: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rows = normalize_rows(self.rows) if self.rows else ()
        for r in rows:
            if len(r) != self.dim:
                raise ValueError(f"row {r} has length {len(r)}, expected {self.dim}")
        object.__setattr__(self, "rows", rows)

    def contains(self, v: Sequence) -> bool:
        return all(_dot(r, v) >= 0 for r in self.rows)

    def to_json(self) -> dict:
        return {"dim": self.dim, "coords": list(self.coords), "rows": [list(r) for r in self.rows]}

    def hrep(self) -> str:
        names = self.coords or tuple(f"v{j}" for j in range(self.dim))
        lines = []
        for r in self.rows:
            terms = []
            for c, n in zip(r, names):
                if c == 0:
                    continue
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else str(abs(c))
                terms.append(f"{sign} {mag}{n}")
            s = " ".join(terms)
            lines.append((s[2:] if s.startswith("+ ") else "-" + s[2:]) + " >= 0")
        return "\n".join(lines)


@dataclass(frozen=True)
class VRep:
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]


def check_dim(d: int) -> None:
    if d > MAX_DIM:
        raise DimensionCapError(f"ambient dimension {d} exceeds the cap {MAX_DIM}")


def _pointed_rays(rows: list[Vec], d: int) -> list[Vec]:
    """Extreme rays of a pointed cone ``{v : rows v >= 0}`` (rows have full rank ``d``)."""
    # pick d independent rows to seed the iteration
    basis: list[Vec] = []
    for r in rows:
        if rank(basis + [r]) > len(basis):
            basis.append(r)
        if len(basis) == d:
            break
    inv = inverse(basis)
    rays = [primitive([inv[i][j] for i in range(d)]) for j in range(d)]
    done = list(basis)
    rest = [r for r in rows if r not in basis]
    for r in rest:
        vals = [_dot(r, v) for v in rays]
        pos = [v for v, s in zip(rays, vals) if s > 0]
        zero = [v for v, s in zip(rays, vals) if s == 0]
        neg = [(v, s) for v, s in zip(rays, vals) if s < 0]
        if not neg:
            done.append(r)
            continue
        zsets = {v: frozenset(j for j, h in enumerate(done) if _dot(h, v) == 0) for v in rays}
        new = []
        candidates = pos + zero + [v for v, _ in neg]
        for p in pos:
            sp = _dot(r, p)
            for q, sq in neg:
                common = zsets[p] & zsets[q]
                if len(common) < d - 2:
                    continue
                if any(o != p and o != q and common <= zsets[o] for o in candidates):
                    continue
                new.append(primitive([sp * a - sq * b for a, b in zip(q, p)]))
        rays = pos + zero + new
        done.append(r)
    return sorted(set(rays))


def double_description(cone: ConeH) -> VRep:
    d = cone.dim
    check_dim(d)
    rows = list(cone.rows)
    lin = [primitive(v) for v in nullspace(rows, d)] if rows else [
        tuple(int(i == j) for j in range(d)) for i in range(d)]
    if len(lin) == d:
        return VRep((), tuple(lin))
    # restrict to the orthogonal complement of the lineality space
    ext = rows + [tuple(v) for v in lin] + [tuple(-x for x in v) for v in lin]
    rays = _pointed_rays(ext, d)
    return VRep(tuple(rays), tuple(lin))


def cone_extreme_rays(cone: ConeH) -> list[Vec]:
    return list(double_description(cone).rays)


def cone_contains(outer: ConeH, inner: ConeH) -> bool:
    v = double_description(inner)
    return (all(outer.contains(r) for r in v.rays)
            and all(outer.contains(l) and outer.contains([-x for x in l]) for l in v.lineality))


def cones_equal(c1: ConeH, c2: ConeH) -> bool:
    if c1.dim != c2.dim:
        return False
    return cone_contains(c1, c2) and cone_contains(c2, c1)


# -- lattice maps ---------------------------------------------------------

@dataclass(frozen=True)
class LatticeMap:
    """``v -> matrix v + translation`` on ``Z^d``."""

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...] | None = None

    @classmethod
    def of(cls, matrix: Sequence[Sequence[int]], translation: Sequence[int] | None = None) -> "LatticeMap":
        return cls(tuple(tuple(int(x) for x in r) for r in matrix),
                   None if translation is None else tuple(int(x) for x in translation))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def det(self) -> int:
        return int(det(self.matrix))

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        out = matvec(self.matrix, v)
        if self.translation is not None:
            out = [a + b for a, b in zip(out, self.translation)]
        return tuple(int(x) for x in out)

    def inverse(self) -> "LatticeMap":
        inv = inverse(self.matrix)
        if any(x.denominator != 1 for r in inv for x in r):
            raise ValueError("lattice map is not unimodular")
        m = [[int(x) for x in r] for r in inv]
        t = None
        if self.translation is not None:
            t = [-x for x in matvec(m, self.translation)]
        return LatticeMap.of(m, t)

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix],
                "translation": None if self.translation is None else list(self.translation)}


def transform_cone(cone: ConeH, m: LatticeMap | Sequence[Sequence[int]], coords: Sequence[str] = ()) -> ConeH:
    """Image of a cone under an invertible linear map: rows become ``rows . M^-1``."""
    matrix = m.matrix if isinstance(m, LatticeMap) else m
    inv = inverse(matrix)
    rows = matmul(cone.rows, inv) if cone.rows else []
    return ConeH(cone.dim, tuple(primitive(r) for r in rows), tuple(coords) or cone.coords)


# -- polytope slices ------------------------------------------------------

def slice_vertices(cone: ConeH, fixed: dict[int, int]) -> list[tuple[Fraction, ...]]:
    """Vertices of ``{free coords : (fixed, free) in cone}``; raises if unbounded or empty."""
    free = [j for j in range(cone.dim) if j not in fixed]
    rows = []
    for r in cone.rows:
        rows.append((sum(r[j] * v for j, v in fixed.items()),) + tuple(r[j] for j in free))
    rows.append((1,) + (0,) * len(free))
    homog = ConeH(len(free) + 1, tuple(rows))
    v = double_description(homog)
    if v.lineality:
        raise UnboundedError("slice contains a line")
    verts = []
    for ray in v.rays:
        if ray[0] == 0:
            raise UnboundedError("slice has a recession direction")
        verts.append(tuple(Fraction(x, ray[0]) for x in ray[1:]))
    if not verts:
        raise InfeasibleError("empty slice")
    return verts


def slice_bounds(cone: ConeH, fixed: dict[int, int]) -> list[tuple[int, int]]:
    verts = slice_vertices(cone, fixed)
    return [(ceil(min(col)), floor(max(col))) for col in zip(*verts)]


def lattice_points(cone: ConeH, fixed: dict[int, int]) -> list[tuple[int, ...]]:
    """Integer points of the slice, in lexicographic order of the free coordinates."""
    free = [j for j in range(cone.dim) if j not in fixed]
    try:
        bounds = slice_bounds(cone, fixed)
    except InfeasibleError:
        return []
    # each row becomes (constant, coefficients on free coords); check a row as soon as
    # its last free coordinate is assigned
    rows = []
    for r in cone.rows:
        const = sum(r[j] * v for j, v in fixed.items())
        coef = [r[j] for j in free]
        last = max((p for p, c in enumerate(coef) if c), default=-1)
        rows.append((last, const, coef))
    by_level: dict[int, list] = {}
    for last, const, coef in rows:
        if last < 0:
            if const < 0:
                return []
            continue
        by_level.setdefault(last, []).append((const, coef))
    out: list[tuple[int, ...]] = []
    point = [0] * len(free)

    def rec(p: int) -> None:
        if p == len(free):
            out.append(tuple(point))
            return
        lo, hi = bounds[p]
        for val in range(lo, hi + 1):
            point[p] = val
            if all(const + _dot(coef[:p + 1], point[:p + 1]) >= 0 for const, coef in by_level.get(p, ())):
                rec(p + 1)
        point[p] = 0

    rec(0)
    return out


__all__ = ["ConeH", "VRep", "LatticeMap", "double_description", "cone_extreme_rays", "cones_equal",
           "cone_contains", "transform_cone", "slice_vertices", "slice_bounds", "lattice_points",
           "normalize_rows", "check_dim", "MAX_DIM"]

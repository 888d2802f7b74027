"""Exact subtraction-free rational functions over named variable sets.

A :class:`PosRat` is a quotient of two Laurent polynomials with positive
rational coefficients.  The normal form divides the denominator's monomial
content into the numerator, tries an exact division of numerator by
denominator (accepted only when the quotient is again subtraction-free) and
scales so that the lexicographically least denominator term has coefficient 1.
Equality is decided by cross-multiplication, so it never depends on how far
the normal form managed to cancel.

Tropicalisation uses the min convention: ``[P/Q](xi) = min_P <xi,u> - min_Q <xi,u>``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotMonomialError, VarSetMismatch

Exp = tuple[int, ...]


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    @cached_property
    def position(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self.position[name]
        except KeyError:
            raise VarSetMismatch(f"{name!r} is not a variable of {self.names}") from None

    def unit(self, name: str) -> Exp:
        k = self.index(name)
        return tuple(int(j == k) for j in range(len(self)))


# -- Laurent polynomials --------------------------------------------------

class Poly:
    """Laurent polynomial ``{exponent tuple: Fraction}``; zero coefficients never stored."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Exp, Fraction], nvars: int):
        self.terms = {e: c for e, c in terms.items() if c != 0}
        self.nvars = nvars

    @classmethod
    def const(cls, value, nvars: int) -> "Poly":
        return cls({(0,) * nvars: Fraction(value)}, nvars)

    @classmethod
    def monomial(cls, exp: Exp, coeff=1) -> "Poly":
        return cls({tuple(exp): Fraction(coeff)}, len(exp))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Poly({self.terms!r})"

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.nvars)

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return Poly(out, self.nvars)

    def __mul__(self, other: "Poly") -> "Poly":
        if len(self.terms) == 1:
            ((e0, c0),) = self.terms.items()
            return Poly({tuple(a + b for a, b in zip(e0, e)): c0 * c for e, c in other.terms.items()},
                        self.nvars)
        if len(other.terms) == 1:
            return other * self
        out: dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars)

    def scale(self, c) -> "Poly":
        return Poly({e: v * c for e, v in self.terms.items()}, self.nvars)

    def shift(self, exp: Sequence[int]) -> "Poly":
        return Poly({tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}, self.nvars)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def min_exponents(self) -> Exp:
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exp:
        return tuple(max(col) for col in zip(*self.terms))

    def lex_least(self) -> tuple[Exp, Fraction]:
        e = min(self.terms)
        return e, self.terms[e]

    def divexact(self, other: "Poly") -> "Poly | None":
        """``self / other`` if it is a Laurent polynomial, else ``None``."""
        if not self.terms:
            return Poly({}, self.nvars)
        a_lo, b_lo = self.min_exponents(), other.min_exponents()
        num, den = self.shift([-x for x in a_lo]), other.shift([-x for x in b_lo])
        hi_n, hi_d = num.max_exponents(), den.max_exponents()
        if any(x < y for x, y in zip(hi_n, hi_d)):
            return None
        bound = tuple(x - y for x, y in zip(hi_n, hi_d))
        lead_e = max(den.terms)
        lead_c = den.terms[lead_e]
        rem = dict(num.terms)
        quot: dict[Exp, Fraction] = {}
        while rem:
            e = max(rem)
            q = tuple(x - y for x, y in zip(e, lead_e))
            if any(x < 0 or x > b for x, b in zip(q, bound)):
                return None
            c = rem[e] / lead_c
            quot[q] = c
            for de, dc in den.terms.items():
                t = tuple(x + y for x, y in zip(q, de))
                v = rem.get(t, 0) - c * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        shift = tuple(x - y for x, y in zip(a_lo, b_lo))
        return Poly(quot, self.nvars).shift(shift)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_poly(p: Poly, names: Sequence[str]) -> str:
    if not p.terms:
        return "0"
    parts = []
    # descending total degree, then lex descending: leading terms first
    for e in sorted(p.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
        c = p.terms[e]
        factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
        if c != 1 or not factors:
            factors.insert(0, _fmt_coeff(c))
        parts.append("*".join(factors))
    return " + ".join(parts)


# -- positive rational functions -----------------------------------------

class PosRat:
    """Subtraction-free rational function ``num / den`` over a :class:`VarSet`."""

    __slots__ = ("varset", "num", "den")

    def __init__(self, varset: VarSet, num: Poly, den: Poly | None = None, *, normalize: bool = True):
        self.varset = varset
        if den is None:
            den = Poly.const(1, len(varset))
        if not den.terms:
            raise ZeroDivisionError("empty denominator")
        if not (num.is_positive() and den.is_positive()):
            raise ValueError("PosRat needs positive coefficients")
        self.num, self.den = (_normalize(num, den) if normalize else (num, den))

    # constructors
    @classmethod
    def const(cls, varset: VarSet, value=1) -> "PosRat":
        return cls(varset, Poly.const(value, len(varset)))

    @classmethod
    def var(cls, varset: VarSet, name: str) -> "PosRat":
        return cls(varset, Poly.monomial(varset.unit(name)))

    @classmethod
    def monomial(cls, varset: VarSet, exps: Mapping[str, int] | Sequence[int], coeff=1) -> "PosRat":
        if isinstance(exps, Mapping):
            e = [0] * len(varset)
            for name, k in exps.items():
                e[varset.index(name)] += k
            exps = e
        return cls(varset, Poly.monomial(tuple(exps), coeff))

    @classmethod
    def parse(cls, varset: VarSet, text: str) -> "PosRat":
        return _Parser(varset, text).parse()

    # predicates
    def is_laurent(self) -> bool:
        """Regular on the torus: denominator is a single monomial (here: the constant 1)."""
        return self.den.is_monomial()

    def is_monomial(self) -> bool:
        return self.num.is_monomial() and self.den.is_monomial()

    def monomial_exponents(self) -> Exp:
        """Exponent vector of a coefficient-1 monomial."""
        if not self.is_monomial():
            raise NotMonomialError(f"{self} is not a monomial")
        (ne, nc), = self.num.terms.items()
        (de, dc), = self.den.terms.items()
        if nc / dc != 1:
            raise NotMonomialError(f"{self} has coefficient {nc / dc}")
        return tuple(a - b for a, b in zip(ne, de))

    # arithmetic
    def _check(self, other: "PosRat") -> None:
        if self.varset != other.varset:
            raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")

    def _lift(self, other) -> "PosRat":
        if isinstance(other, PosRat):
            self._check(other)
            return other
        return PosRat.const(self.varset, other)

    def __add__(self, other) -> "PosRat":
        other = self._lift(other)
        if self.den == other.den:
            return PosRat(self.varset, self.num + other.num, self.den)
        return PosRat(self.varset, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __mul__(self, other) -> "PosRat":
        other = self._lift(other)
        return PosRat(self.varset, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "PosRat":
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        return PosRat(self.varset, self.den, self.num)

    def __truediv__(self, other) -> "PosRat":
        return self * self._lift(other).inv()

    def __rtruediv__(self, other) -> "PosRat":
        return self._lift(other) / self

    def __pow__(self, k: int) -> "PosRat":
        if k >= 0:
            return PosRat(self.varset, self.num ** k, self.den ** k)
        return self.inv() ** (-k)

    def equals(self, other: "PosRat") -> bool:
        self._check(other)
        return (self.num * other.den) == (other.num * self.den)

    def __eq__(self, other) -> bool:
        return isinstance(other, PosRat) and self.varset == other.varset and self.equals(other)

    def __hash__(self):
        return hash(self.varset)

    # evaluation
    def __call__(self, point: Mapping[str, Fraction] | Sequence[Fraction]) -> Fraction:
        if isinstance(point, Mapping):
            point = [Fraction(point[n]) for n in self.varset.names]
        return self.num.evaluate(point) / self.den.evaluate(point)

    # display / serialisation
    def __str__(self) -> str:
        n = _fmt_poly(self.num, self.varset.names)
        if self.den == Poly.const(1, len(self.varset)):
            return n
        d = _fmt_poly(self.den, self.varset.names)
        return f"({n})/({d})"

    def __repr__(self) -> str:
        return f"PosRat<{self}>"

    def to_json(self) -> dict:
        return {"vars": list(self.varset.names),
                "num": poly_to_json(self.num, self.varset),
                "den": poly_to_json(self.den, self.varset)}

    @classmethod
    def from_json(cls, data: Mapping) -> "PosRat":
        vs = VarSet(tuple(data["vars"]))
        return cls(vs, poly_from_json(data["num"], vs), poly_from_json(data["den"], vs))


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    lo = den.min_exponents()
    if any(lo):
        neg = [-x for x in lo]
        num, den = num.shift(neg), den.shift(neg)
    if len(den.terms) > 1 and num.terms:
        q = num.divexact(den)
        if q is not None and q.is_positive():
            num, den = q, Poly.const(1, den.nvars)
    _, c = den.lex_least()
    if c != 1:
        num, den = num.scale(1 / c), den.scale(1 / c)
    return num, den


def poly_to_json(p: Poly, vs: VarSet) -> list[dict]:
    return [{"exponents": {n: k for n, k in zip(vs.names, e) if k}, "coeff": _fmt_coeff(c)}
            for e, c in sorted(p.terms.items())]


def poly_from_json(data: Iterable[Mapping], vs: VarSet) -> Poly:
    terms = {}
    for t in data:
        e = [0] * len(vs)
        for name, k in t["exponents"].items():
            e[vs.index(name)] = int(k)
        terms[tuple(e)] = Fraction(t["coeff"])
    return Poly(terms, len(vs))


# -- maps -----------------------------------------------------------------

class RationalMap:
    """``source -> target``: one PosRat over ``source`` per ``target`` variable."""

    __slots__ = ("source", "target", "coords")

    def __init__(self, source: VarSet, target: VarSet, coords: Sequence[PosRat]):
        coords = tuple(coords)
        if len(coords) != len(target):
            raise VarSetMismatch(f"{len(coords)} coordinates for {len(target)} target variables")
        for f in coords:
            if f.varset != source:
                raise VarSetMismatch(f"coordinate over {f.varset.names}, expected {source.names}")
        self.source, self.target, self.coords = source, target, coords

    @classmethod
    def identity(cls, vs: VarSet) -> "RationalMap":
        return cls(vs, vs, [PosRat.var(vs, n) for n in vs.names])

    @classmethod
    def from_matrix(cls, source: VarSet, target: VarSet, matrix: Sequence[Sequence[int]]) -> "RationalMap":
        """Monomial map whose target coordinate ``t`` is ``prod_s x_s^{matrix[t][s]}``."""
        return cls(source, target, [PosRat.monomial(source, row) for row in matrix])

    def __getitem__(self, name: str) -> PosRat:
        return self.coords[self.target.index(name)]

    def is_monomial(self) -> bool:
        try:
            self.matrix()
        except NotMonomialError:
            return False
        return True

    def matrix(self) -> list[list[int]]:
        return [list(f.monomial_exponents()) for f in self.coords]

    def __call__(self, point):
        return tuple(f(point) for f in self.coords)

    def equals(self, other: "RationalMap") -> bool:
        return (self.source == other.source and self.target == other.target
                and all(f.equals(g) for f, g in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.coords) + ")"

    def __repr__(self) -> str:
        return f"RationalMap<{self.source.names} -> {self.target.names}: {self}>"

    def to_json(self) -> dict:
        return {"source": list(self.source.names), "target": list(self.target.names),
                "coords": {n: f.to_json() for n, f in zip(self.target.names, self.coords)}}


def substitute(f: PosRat, m: RationalMap) -> PosRat:
    """Pull back ``f`` (over ``m.target``) along ``m``; the result lives on ``m.source``."""
    if f.varset != m.target:
        raise VarSetMismatch(f"function over {f.varset.names}, map target {m.target.names}")
    nsrc = len(m.source)
    terms = list(f.num.terms.items()) + list(f.den.terms.items())
    lo = [min(e[j] for e, _ in terms) for j in range(len(m.target))]
    hi = [max(e[j] for e, _ in terms) for j in range(len(m.target))]
    tops = [g.num for g in m.coords]
    bots = [g.den for g in m.coords]
    cache: dict[tuple[int, int, int], Poly] = {}

    def power(j: int, which: int, k: int) -> Poly:
        key = (j, which, k)
        if key not in cache:
            base = tops[j] if which == 0 else bots[j]
            cache[key] = base ** k
        return cache[key]

    def image(p: Poly) -> Poly:
        out = Poly({}, nsrc)
        for e, c in p.terms.items():
            term = Poly.const(c, nsrc)
            for j, k in enumerate(e):
                up, down = k - lo[j], hi[j] - k
                if up:
                    term = term * power(j, 0, up)
                if down:
                    term = term * power(j, 1, down)
            out = out + term
        return out

    return PosRat(m.source, image(f.num), image(f.den))


def compose(m2: RationalMap, m1: RationalMap) -> RationalMap:
    """``m2 o m1``."""
    if m2.source != m1.target:
        raise VarSetMismatch(f"cannot compose: {m2.source.names} vs {m1.target.names}")
    return RationalMap(m1.source, m2.target, [substitute(f, m1) for f in m2.coords])


def compose_all(maps: Sequence[RationalMap], vs: VarSet | None = None) -> RationalMap:
    """``maps[-1] o ... o maps[0]``; identity on ``vs`` for an empty list."""
    if not maps:
        if vs is None:
            raise ValueError("empty composition needs a VarSet")
        return RationalMap.identity(vs)
    out = maps[0]
    for m in maps[1:]:
        out = compose(m, out)
    return out


def pullback(f: PosRat, maps: Sequence[RationalMap]) -> PosRat:
    """``f o maps[-1] o ... o maps[0]``, substituting one map at a time."""
    for m in reversed(maps):
        f = substitute(f, m)
    return f


def linear_matrix(m: RationalMap) -> list[list[int]]:
    """Exponent matrix of a monomial map; rows are target coordinates."""
    return m.matrix()


# -- tropicalisation ------------------------------------------------------

@dataclass(frozen=True)
class TropForm:
    varset: VarSet
    num: tuple[Exp, ...]
    den: tuple[Exp, ...]

    def __post_init__(self):
        if not self.den:
            raise ValueError("tropical denominator set must be nonempty")

    def __call__(self, point: Sequence[int]) -> int:
        def low(exps):
            return min(sum(a * b for a, b in zip(u, point)) for u in exps)
        return low(self.num) - low(self.den)

    def rows(self) -> list[Exp]:
        """Linear forms ``u - v`` whose joint nonnegativity is ``[f]_trop >= 0`` (monomial denominator only)."""
        if len(self.den) != 1:
            from .errors import NotRegularError
            raise NotRegularError("tropical inequality needs a monomial denominator")
        (v,) = self.den
        return [tuple(a - b for a, b in zip(u, v)) for u in self.num]

    def to_json(self) -> dict:
        return {"vars": list(self.varset.names), "num": [list(u) for u in self.num],
                "den": [list(u) for u in self.den]}


def tropicalize(f: PosRat) -> TropForm:
    return TropForm(f.varset, tuple(sorted(f.num.terms)), tuple(sorted(f.den.terms)))


def trop_eval(t: TropForm, point: Sequence[int]) -> int:
    return t(point)


@dataclass(frozen=True)
class PLMap:
    source: VarSet
    target: VarSet
    forms: tuple[TropForm, ...]

    def __call__(self, point: Sequence[int]) -> tuple[int, ...]:
        return tuple(t(point) for t in self.forms)

    def to_json(self) -> dict:
        return {"source": list(self.source.names), "target": list(self.target.names),
                "forms": [t.to_json() for t in self.forms]}


def trop_map(m: RationalMap) -> PLMap:
    return PLMap(m.source, m.target, tuple(tropicalize(f) for f in m.coords))


# -- parser for hand-written expressions ----------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]\w*(?:\[-?\d+\])?)|(?P<num>\d+(?:/\d+)?)"
                    r"|(?P<int>-?\d+)|(?P<op>[-+*/^()]))")


class _Parser:
    """Recursive descent over ``+ * / ^ ( )`` with names like ``x[-1]`` or ``l[2]``."""

    def __init__(self, varset: VarSet, text: str):
        self.vs, self.text, self.pos = varset, text, 0
        self.tokens = []
        while self.pos < len(text):
            if text[self.pos:].strip() == "":
                break
            m = _TOKEN.match(text, self.pos)
            if not m:
                raise ValueError(f"cannot tokenize {text[self.pos:]!r}")
            self.pos = m.end()
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise ValueError(f"expected {value!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> PosRat:
        out = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return out

    def expr(self) -> PosRat:
        out = self.term()
        while self.peek()[1] == "+":
            self.take()
            out = out + self.term()
        return out

    def term(self) -> PosRat:
        out = self.factor()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.factor()
            out = out * rhs if op == "*" else out / rhs
        return out

    def factor(self) -> PosRat:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, val = self.take()
            if kind not in ("num", "int") or "/" in val:
                raise ValueError("exponent must be an integer")
            base = base ** (sign * int(val))
        return base

    def atom(self) -> PosRat:
        kind, val = self.take()
        if kind == "name":
            return PosRat.var(self.vs, val)
        if kind == "num":
            return PosRat.const(self.vs, Fraction(val))
        if val == "(":
            out = self.expr()
            self.take(")")
            return out
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")

"""Simply-laced Cartan data, reduced words of the longest Weyl element, and moves.

Node numbering (Bourbaki):

* ``A_n``: chain ``1 - 2 - ... - n``.
* ``D_n`` (n >= 4): chain ``1 - 2 - ... - (n-2)`` with ``n-2`` joined to both
  ``n-1`` and ``n``.  For ``D4`` node 2 is the fork.
* ``E_n`` (n = 6, 7, 8): chain ``1 - 3 - 4 - 5 - 6 (- 7 - 8)`` with ``2`` joined to ``4``.

Roots are integer vectors in the basis of simple roots.  Words are tuples of
1-based letters.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable, Sequence

from .errors import CartanError, InvalidWordError, MoveError

Root = tuple[int, ...]
Word = tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    type_label: str
    entries: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __call__(self, a: int, b: int) -> int:
        """Entry ``c_{a,b}`` with 1-based node labels."""
        return self.entries[a - 1][b - 1]

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots, closed under simple reflections (independent of words)."""
        n = self.rank
        simple = [tuple(int(a == b) for b in range(n)) for a in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for a in self.nodes:
                image = reflect(self, a, beta)
                if all(c >= 0 for c in image) and image not in seen:
                    seen.add(image)
                    queue.append(image)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def longest_word(self) -> Word:
        return longest_word(self)

    @cached_property
    def star(self) -> dict[int, int]:
        return star_involution(self)

    def to_json(self) -> dict:
        return {"type": self.type_label, "rank": self.rank, "entries": [list(r) for r in self.entries]}


def _edges(kind: str, rank: int) -> list[tuple[int, int]]:
    if kind == "A":
        if rank < 1:
            raise CartanError(f"A_n needs n >= 1, got {rank}")
        return [(a, a + 1) for a in range(1, rank)]
    if kind == "D":
        if rank < 4:
            raise CartanError(f"D_n needs n >= 4, got {rank}")
        return [(a, a + 1) for a in range(1, rank - 1)] + [(rank - 2, rank)]
    if kind == "E":
        if rank not in (6, 7, 8):
            raise CartanError(f"E_n needs n in {{6, 7, 8}}, got {rank}")
        return [(1, 3), (3, 4), (2, 4)] + [(a, a + 1) for a in range(4, rank)]
    raise CartanError(f"type {kind!r} is not simply laced (A, D, E only)")


def build_cartan(type_label: str, rank: int | None = None) -> CartanMatrix:
    """``build_cartan("A", 2)`` or ``build_cartan("A2")``."""
    if rank is None:
        m = re.fullmatch(r"\s*([A-Za-z])\s*_?(\d+)\s*", type_label)
        if not m:
            raise CartanError(f"cannot parse Cartan type {type_label!r}")
        kind, rank = m.group(1).upper(), int(m.group(2))
    else:
        kind = type_label.strip().upper()
    edges = _edges(kind, rank)
    c = [[2 if a == b else 0 for b in range(rank)] for a in range(rank)]
    for a, b in edges:
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1
    return CartanMatrix(f"{kind}{rank}", tuple(tuple(r) for r in c))


@lru_cache(maxsize=None)
def cartan(label: str) -> CartanMatrix:
    return build_cartan(label)


def reflect(c: CartanMatrix, a: int, root: Sequence[int]) -> Root:
    """``s_a(mu) = mu - <mu, h_a> alpha_a`` in simple-root coordinates."""
    pairing = sum(root[b - 1] * c(b, a) for b in c.nodes)
    out = list(root)
    out[a - 1] -= pairing
    return tuple(out)


def _check_letters(word: Sequence[int], c: CartanMatrix) -> None:
    for a in word:
        if not isinstance(a, int) or not 1 <= a <= c.rank:
            raise InvalidWordError(f"letter {a!r} out of range 1..{c.rank} for {c.type_label}")


def _simple(c: CartanMatrix, a: int) -> Root:
    return tuple(int(b == a) for b in c.nodes)


def _apply_word(c: CartanMatrix, word: Sequence[int], root: Sequence[int]) -> Root:
    # s_{w_1} ... s_{w_k} (root): rightmost acts first
    out = tuple(root)
    for a in reversed(word):
        out = reflect(c, a, out)
    return out


def is_reduced(word: Sequence[int], c: CartanMatrix) -> bool:
    """Root-positivity test: ``l(w s_a) > l(w)`` iff ``w(alpha_a) > 0``."""
    _check_letters(word, c)
    for k, a in enumerate(word):
        image = _apply_word(c, word[:k], _simple(c, a))
        if any(x < 0 for x in image):
            return False
    return True


def is_longest(word: Sequence[int], c: CartanMatrix) -> bool:
    return len(word) == c.num_positive_roots and is_reduced(word, c)


def require_longest(word: Sequence[int], c: CartanMatrix) -> Word:
    word = tuple(word)
    if not is_longest(word, c):
        raise InvalidWordError(f"{list(word)} is not a reduced word for w0 in {c.type_label}")
    return word


def longest_word(c: CartanMatrix) -> Word:
    """Lexicographically smallest reduced word for w0 (greedy right ascents)."""
    word: list[int] = []
    while len(word) < c.num_positive_roots:
        for a in c.nodes:
            if all(x >= 0 for x in _apply_word(c, word, _simple(c, a))):
                word.append(a)
                break
        else:  # pragma: no cover - every w != w0 has a right ascent
            raise AssertionError("no ascent found before reaching w0")
    return tuple(word)


def convex_order(word: Sequence[int], c: CartanMatrix) -> list[Root]:
    """``beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})``."""
    word = require_longest(word, c)
    return [_apply_word(c, word[:k], _simple(c, a)) for k, a in enumerate(word)]


def star_involution(c: CartanMatrix) -> dict[int, int]:
    """``a -> a*`` with ``w0(alpha_a) = -alpha_{a*}``."""
    w0 = longest_word(c)
    out = {}
    for a in c.nodes:
        image = _apply_word(c, w0, _simple(c, a))
        (b,) = [b for b in c.nodes if image[b - 1] != 0]
        assert image[b - 1] == -1
        out[a] = b
    return out


def weyl_dim(c: CartanMatrix, weight: Sequence[int]) -> int:
    """Weyl dimension formula; for simply-laced types ``<mu, beta^vee> = sum n_a mu_a``."""
    weight = tuple(weight)
    if len(weight) != c.rank:
        raise CartanError(f"weight {weight} has wrong length for {c.type_label}")
    if any(x < 0 for x in weight):
        raise CartanError(f"weight {weight} is not dominant")
    num = prod(sum(n * (w + 1) for n, w in zip(beta, weight)) for beta in c.positive_roots)
    den = prod(sum(beta) for beta in c.positive_roots)
    assert num % den == 0
    return num // den


# -- moves -----------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """A 2-move swaps positions ``k, k+1``; a 3-move rewrites ``k-1, k, k+1`` (1-based)."""

    kind: int
    position: int

    def __post_init__(self):
        if self.kind not in (2, 3):
            raise MoveError(f"move kind must be 2 or 3, got {self.kind}")

    def to_json(self) -> dict:
        return {"kind": self.kind, "position": self.position}


def move_apply(word: Sequence[int], move: Move, c: CartanMatrix) -> Word:
    w = list(word)
    k = move.position
    if move.kind == 2:
        if not 1 <= k < len(w):
            raise MoveError(f"2-move position {k} out of range")
        a, b = w[k - 1], w[k]
        if c(a, b) != 0:
            raise MoveError(f"2-move at {k} needs commuting letters, got {a}, {b}")
        w[k - 1], w[k] = b, a
    else:
        if not 2 <= k < len(w):
            raise MoveError(f"3-move position {k} out of range")
        a, b, a2 = w[k - 2], w[k - 1], w[k]
        if a != a2 or c(a, b) != -1:
            raise MoveError(f"3-move at {k} needs a pattern (a, b, a) with c_ab = -1, got {(a, b, a2)}")
        w[k - 2], w[k - 1], w[k] = b, a, b
    return tuple(w)


def applicable_moves(word: Sequence[int], c: CartanMatrix) -> list[Move]:
    out = []
    for k in range(1, len(word)):
        if c(word[k - 1], word[k]) == 0:
            out.append(Move(2, k))
    for k in range(2, len(word)):
        a, b, a2 = word[k - 2], word[k - 1], word[k]
        if a == a2 and c(a, b) == -1:
            out.append(Move(3, k))
    return out


@dataclass
class WordGraph:
    """Reduced words of w0 connected by moves; BFS parents are memoised per source."""

    cartan: CartanMatrix
    _bfs: dict = field(default_factory=dict, repr=False)

    def neighbours(self, word: Word) -> list[tuple[Move, Word]]:
        return [(m, move_apply(word, m, self.cartan)) for m in applicable_moves(word, self.cartan)]

    def _tree(self, source: Word) -> dict[Word, tuple[Word, Move] | None]:
        tree = self._bfs.get(source)
        if tree is None:
            tree = {source: None}
            queue = deque([source])
            while queue:
                w = queue.popleft()
                for m, v in self.neighbours(w):
                    if v not in tree:
                        tree[v] = (w, m)
                        queue.append(v)
            self._bfs[source] = tree
        return tree

    def words(self) -> list[Word]:
        return sorted(self._tree(self.cartan.longest_word))

    def path(self, source: Word, target: Word) -> list[Move]:
        tree = self._tree(source)
        if target not in tree:
            raise InvalidWordError(f"{list(target)} is not connected to {list(source)}")
        moves = []
        w = target
        while tree[w] is not None:
            prev, m = tree[w]
            moves.append(m)
            w = prev
        return moves[::-1]

    def nearest(self, source: Word, predicate) -> Word:
        """BFS-first word satisfying ``predicate`` (ties broken by BFS order)."""
        tree = self._tree(source)
        for w in tree:  # insertion order is BFS order
            if predicate(w):
                return w
        raise InvalidWordError("no reduced word satisfies the predicate")


@lru_cache(maxsize=None)
def word_graph(c: CartanMatrix) -> WordGraph:
    return WordGraph(c)


def reduced_words(c: CartanMatrix) -> list[Word]:
    return word_graph(c).words()


def move_path(source: Sequence[int], target: Sequence[int], c: CartanMatrix) -> list[Move]:
    source = require_longest(source, c)
    target = require_longest(target, c)
    return word_graph(c).path(source, target)


def word_ending_in(word: Sequence[int], a: int, c: CartanMatrix) -> Word:
    """A reduced word closest to ``word`` whose last letter is ``a``."""
    word = require_longest(word, c)
    return word_graph(c).nearest(word, lambda w: w[-1] == a)


# -- per-word tables -------------------------------------------------------

@dataclass(frozen=True)
class ReducedWord:
    """A reduced word for w0 with its extended index set ``M = -[n] u [N]``.

    Index ``k < 0`` carries letter ``-k``; ``succ[k]`` is ``k+`` (``N+1`` if
    absent) and ``pred[k]`` is ``k-`` for ``k`` in ``[N]``.
    """

    letters: Word
    cartan: CartanMatrix

    def __post_init__(self):
        object.__setattr__(self, "letters", require_longest(self.letters, self.cartan))

    @property
    def N(self) -> int:
        return len(self.letters)

    @property
    def n(self) -> int:
        return self.cartan.rank

    @cached_property
    def indices(self) -> tuple[int, ...]:
        """``M`` in cluster-chart order: ``-1, ..., -n, 1, ..., N``."""
        return tuple(-a for a in self.cartan.nodes) + tuple(range(1, self.N + 1))

    def letter(self, k: int) -> int:
        return -k if k < 0 else self.letters[k - 1]

    @cached_property
    def succ(self) -> dict[int, int]:
        out = {}
        for k in self.indices:
            a = self.letter(k)
            start = max(k, 0) + 1
            out[k] = next((l for l in range(start, self.N + 1) if self.letters[l - 1] == a), self.N + 1)
        return out

    @cached_property
    def pred(self) -> dict[int, int]:
        out = {}
        for k in range(1, self.N + 1):
            a = self.letter(k)
            out[k] = next((l for l in range(k - 1, 0, -1) if self.letters[l - 1] == a), -a)
        return out

    @cached_property
    def occurrences(self) -> dict[int, tuple[int, ...]]:
        """``a -> (k(a,0), k(a,1), ..., k(a,m_a))`` with ``k(a,0) = -a``."""
        return {a: (-a,) + tuple(k for k in range(1, self.N + 1) if self.letters[k - 1] == a)
                for a in self.cartan.nodes}

    def m(self, a: int) -> int:
        return len(self.occurrences[a]) - 1

    def label(self, k: int) -> tuple[int, int]:
        """Occurrence label ``(a, r)`` of index ``k``."""
        a = self.letter(k)
        return a, self.occurrences[a].index(k)

    def index(self, a: int, r: int) -> int:
        return self.occurrences[a][r]

    @cached_property
    def frozen(self) -> frozenset[int]:
        return frozenset(-a for a in self.cartan.nodes) | frozenset(
            self.occurrences[a][-1] for a in self.cartan.nodes)

    @cached_property
    def roots(self) -> list[Root]:
        return convex_order(self.letters, self.cartan)


def parse_word(text: str | Iterable[int]) -> Word:
    if isinstance(text, str):
        parts = [p for p in re.split(r"[\s,]+", text.strip().strip("[]()")) if p]
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise InvalidWordError(f"cannot parse word {text!r}") from exc
    return tuple(int(a) for a in text)

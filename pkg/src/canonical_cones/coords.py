"""Variable layouts of the tori attached to a reduced word.

* word chart (Lusztig or string torus): ``x[1] .. x[N]``
* graded chart: ``l[1] .. l[n], x[1] .. x[N]``
* cluster chart (A- or X-torus): ``x[-1] .. x[-n], x[1] .. x[N]``
"""
from __future__ import annotations

from functools import lru_cache

from .posrat import VarSet


def x(k: int) -> str:
    return f"x[{k}]"


def lam(a: int) -> str:
    return f"l[{a}]"


@lru_cache(maxsize=None)
def chart_vars(N: int) -> VarSet:
    return VarSet(tuple(x(k) for k in range(1, N + 1)))


@lru_cache(maxsize=None)
def graded_vars(n: int, N: int) -> VarSet:
    return VarSet(tuple(lam(a) for a in range(1, n + 1)) + tuple(x(k) for k in range(1, N + 1)))


@lru_cache(maxsize=None)
def cluster_vars(n: int, N: int) -> VarSet:
    return VarSet(tuple(x(-a) for a in range(1, n + 1)) + tuple(x(k) for k in range(1, N + 1)))

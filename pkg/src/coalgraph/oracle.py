"""Deliberately naive reference computations.

Nothing here shares code with the search engine: graphs are turned into
Python ``set`` neighbourhoods, set partitions are generated by recursive
block insertion, and every definition is checked literally.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph_core import Graph


def _closed_sets(g: Graph) -> list[set[int]]:
    return [{v} | {u for u in range(g.n) if g.has_edge(u, v)} for v in range(g.n)]


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
        yield [[first]] + sub


def naive_dominating(closed: list[set[int]], s: set[int]) -> bool:
    n = len(closed)
    covered: set[int] = set()
    for v in s:
        covered |= closed[v]
    return len(covered) == n


def naive_coalition_values(g: Graph) -> tuple[int | None, int | None]:
    """(C(G), c(G)) by checking every set partition against the definition."""
    closed = _closed_sets(g)
    best_order: int | None = None
    best_count: int | None = None
    for blocks in set_partitions(list(range(g.n))):
        sets = [set(b) for b in blocks]
        dom = [naive_dominating(closed, s) for s in sets]
        coalitions = 0
        ok = True
        for i, s in enumerate(sets):
            if dom[i]:
                if len(s) != 1:
                    ok = False
                continue
            if not any(
                j != i and not dom[j] and naive_dominating(closed, s | sets[j]) for j in range(len(sets))
            ):
                ok = False
        if not ok:
            continue
        for i, j in combinations(range(len(sets)), 2):
            if not dom[i] and not dom[j] and naive_dominating(closed, sets[i] | sets[j]):
                coalitions += 1
        best_order = len(sets) if best_order is None else max(best_order, len(sets))
        best_count = coalitions if best_count is None else max(best_count, coalitions)
    return best_order, best_count


def naive_independence_number(g: Graph) -> int:
    best = 0
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            if all(not g.has_edge(a, b) for a, b in combinations(s, 2)):
                best = r
    return best


def naive_domatic_number(g: Graph) -> int:
    closed = _closed_sets(g)
    best = 0
    for blocks in set_partitions(list(range(g.n))):
        if all(naive_dominating(closed, set(b)) for b in blocks):
            best = max(best, len(blocks))
    return best

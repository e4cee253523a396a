"""Pure-Python kernels; the reference the compiled module must agree with.

Both kernels take plain lists of ``int`` bit masks so they can be swapped for
the Cython build without touching callers.
"""

from __future__ import annotations

from typing import Iterator

BACKEND = "python"


def canonical_order(adj: list[int], n: int) -> list[int]:
    """Vertex order minimising the column-order upper-triangle bit string.

    Column ``j`` holds the bits (0,j), (1,j), ..., (j-1,j) with (0,j) most
    significant, so the string compares column by column. The depth-first
    search keeps the best column values found so far and prunes any branch
    whose prefix is already larger.
    """
    if n == 0:
        return []
    inf = 1 << 62
    best = [inf] * n
    best_order = list(range(n))
    order = [0] * n

    def dfs(j: int, used: int) -> None:
        for v in range(n):
            if used >> v & 1:
                continue
            row = adj[v]
            col = 0
            for i in range(j):
                col = (col << 1) | (row >> order[i] & 1)
            b = best[j]
            if col > b:
                continue
            order[j] = v
            if col < b:
                best[j] = col
                for q in range(j + 1, n):
                    best[q] = inf
                if j == n - 1:
                    best_order[:] = order
            if j < n - 1:
                dfs(j + 1, used | (1 << v))

    dfs(0, 0)
    return best_order


def _score_leaf(cov: list[int], nblocks: int, full: int) -> tuple[bool, int]:
    nondom = [b for b in range(nblocks) if cov[b] != full]
    partnered = 0
    pairs = 0
    for x in range(len(nondom)):
        cx = cov[nondom[x]]
        for y in range(x + 1, len(nondom)):
            if cx | cov[nondom[y]] == full:
                pairs += 1
                partnered |= (1 << x) | (1 << y)
    return partnered == (1 << len(nondom)) - 1, pairs


def walk_partitions(closed: list[int], n: int) -> Iterator[tuple[tuple[int, ...], int, int, bool]]:
    """Yield ``(rgs, parts, coalition_pairs, valid)`` for every surviving leaf.

    Restricted-growth strings are visited in lexicographic order. A branch is
    cut as soon as some block would hold two or more vertices and dominate,
    since such a block can never appear in a c-partition.
    """
    full = (1 << n) - 1
    rgs = [0] * n
    cov = [0] * (n + 1)

    def rec(v: int, nb: int) -> Iterator[tuple[tuple[int, ...], int, int, bool]]:
        if v == n:
            valid, pairs = _score_leaf(cov, nb, full)
            yield tuple(rgs), nb, pairs, valid
            return
        cv = closed[v]
        for b in range(nb):
            c = cov[b]
            if c == full:
                continue
            nc = c | cv
            if nc == full:
                continue
            cov[b] = nc
            rgs[v] = b
            yield from rec(v + 1, nb)
            cov[b] = c
        cov[nb] = cv
        rgs[v] = nb
        yield from rec(v + 1, nb + 1)
        cov[nb] = 0

    yield from rec(0, 0)


def search_partitions(closed: list[int], n: int) -> tuple[int, tuple[int, ...] | None, int, tuple[int, ...] | None, int]:
    """Maximise part count and coalition-pair count over valid c-partitions.

    Returns ``(best_parts, parts_rgs, best_pairs, pairs_rgs, examined)``;
    the bests are -1 with ``None`` witnesses when no c-partition exists.
    Witnesses are the lexicographically least maximisers.
    """
    full = (1 << n) - 1
    rgs = [0] * n
    cov = [0] * (n + 1)
    state = [-1, None, -1, None, 0]

    def rec(v: int, nb: int) -> None:
        if v == n:
            state[4] += 1
            valid, pairs = _score_leaf(cov, nb, full)
            if valid:
                if nb > state[0]:
                    state[0] = nb
                    state[1] = tuple(rgs)
                if pairs > state[2]:
                    state[2] = pairs
                    state[3] = tuple(rgs)
            return
        cv = closed[v]
        for b in range(nb):
            c = cov[b]
            if c == full:
                continue
            nc = c | cv
            if nc == full:
                continue
            cov[b] = nc
            rgs[v] = b
            rec(v + 1, nb)
            cov[b] = c
        cov[nb] = cv
        rgs[v] = nb
        rec(v + 1, nb + 1)
        cov[nb] = 0

    rec(0, 0)
    return state[0], state[1], state[2], state[3], state[4]

"""Dominating-set predicates, independence number and domatic number."""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import (
    Graph,
    GraphError,
    VertexSet,
    bits,
    check_cap,
    popcount,
    vertex_roles,
)

SEARCH_CAP = 20
SEARCH_CAP_DOMATIC = 12


class DominationError(GraphError):
    """Raised when a domination routine's precondition does not hold."""


@dataclass(frozen=True)
class DomaticResult:
    d: int
    witness: tuple[VertexSet, ...]


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    m: int
    f: int
    delta: int
    alpha: int
    domatic_d: int


def coverage(g: Graph, mask: int) -> int:
    """Union of closed neighbourhoods of the vertices in ``mask``."""
    cov = mask
    for v in bits(mask):
        cov |= g.adj[v]
    return cov


def dominates(g: Graph, mask: int) -> bool:
    return coverage(g, mask) == g.full_mask


def _check_host(g: Graph, s: VertexSet) -> None:
    if s.host_n != g.n:
        raise DominationError(f"vertex set over {s.host_n} vertices used with a graph on {g.n}")


def is_dominating(g: Graph, s: VertexSet) -> bool:
    # The empty set covers nothing, so it dominates only the empty graph.
    _check_host(g, s)
    return dominates(g, s.mask)


def shrink_to_minimal(g: Graph, d: VertexSet) -> VertexSet:
    """Drop the highest-index removable vertex until none is removable."""
    _check_host(g, d)
    if not dominates(g, d.mask):
        raise DominationError(f"{d} is not a dominating set")
    mask = d.mask
    while True:
        for v in sorted(bits(mask), reverse=True):
            if dominates(g, mask & ~(1 << v)):
                mask &= ~(1 << v)
                break
        else:
            return VertexSet(mask, g.n)


def split_dominating(g: Graph, d: VertexSet) -> tuple[VertexSet, VertexSet]:
    """Split a minimal dominating set into its lowest vertex and the rest.

    Any proper subset of a minimal dominating set fails to dominate, so both
    halves are non-dominating. A failing post-check means ``d`` was not
    minimal.
    """
    _check_host(g, d)
    if len(d) < 2:
        raise DominationError(f"cannot split {d}: fewer than two vertices")
    if not dominates(g, d.mask):
        raise DominationError(f"{d} is not a dominating set")
    low = d.mask & -d.mask
    a, b = VertexSet(low, g.n), VertexSet(d.mask ^ low, g.n)
    if dominates(g, a.mask) or dominates(g, b.mask):
        raise DominationError(f"{d} is not a minimal dominating set; split {a} | {b} has a dominating half")
    return a, b


def independence_number(g: Graph, cap: int | None = SEARCH_CAP) -> int:
    check_cap(g.n, cap, "independence number")
    adj = g.adj

    def best(mask: int, size: int, floor: int) -> int:
        # size: vertices already chosen; floor: best total seen so far.
        if size + popcount(mask) <= floor:
            return floor
        pivot, pivot_deg = -1, -1
        for v in bits(mask):
            d = popcount(adj[v] & mask)
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if pivot_deg <= 0:
            return max(floor, size + popcount(mask))
        floor = best(mask & ~adj[pivot] & ~(1 << pivot), size + 1, floor)
        return best(mask & ~(1 << pivot), size, floor)

    return best(g.full_mask, 0, 0)


def domatic_number(g: Graph, cap: int | None = SEARCH_CAP_DOMATIC) -> DomaticResult:
    """Exact domatic number with a lowest-index-first witness.

    Tries k = delta+1 downwards; for each k, vertices are assigned in order to
    classes with restricted-growth symmetry breaking, pruning whenever some
    class can no longer become dominating even with every unassigned vertex.
    """
    check_cap(g.n, cap, "domatic number")
    n = g.n
    if n == 0:
        return DomaticResult(0, ())
    full = g.full_mask
    closed = g.closed_rows()
    # reach[v] = coverage still available from vertices v..n-1
    reach = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        reach[v] = reach[v + 1] | closed[v]

    delta = min(g.degrees())
    for k in range(delta + 1, 0, -1):
        assign = [0] * n
        cov = [0] * k

        def place(v: int, used: int) -> bool:
            if v == n:
                return used == k and all(c == full for c in cov)
            if n - v < k - used:
                return False
            rest = reach[v]
            if used < k and rest != full:
                return False
            for c in range(used):
                if cov[c] | rest != full:
                    return False
            for c in range(min(used + 1, k)):
                old = cov[c]
                cov[c] = old | closed[v]
                assign[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
                cov[c] = old
            return False

        if place(0, 0):
            parts = [0] * k
            for v, c in enumerate(assign):
                parts[c] |= 1 << v
            return DomaticResult(k, tuple(VertexSet(p, n) for p in parts))
    raise AssertionError("unreachable: V itself is a dominating set")


def invariant_bundle(g: Graph) -> InvariantBundle:
    roles = vertex_roles(g)
    return InvariantBundle(
        n=g.n,
        m=g.m,
        f=roles.full_count,
        delta=roles.min_degree,
        alpha=independence_number(g),
        domatic_d=domatic_number(g).d,
    )

"""Host graphs whose coalition graph is a prescribed target.

Given a target ``G`` with non-isolated part ``G'`` (order ``n``) and ``t``
isolates, the host starts from ``K_n`` minus a (near-)perfect matching on the
base vertices, adds gadget vertices that break the coalitions of non-edges,
and finally adds one universal vertex per isolate.

Host labeling: every target vertex ``x`` keeps label ``x`` in the host (base
vertex or universal vertex); gadget vertices are numbered from ``G.n`` up.
Part ``i`` of the partition therefore has smallest member ``i`` and
corresponds to target vertex ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .coalition import (
    DOMINATING_NON_SINGLETON,
    ORPHAN,
    Partition,
    assess_partition,
)
from .domination import dominates
from .graph_core import (
    MAX_N,
    CapExceededError,
    Graph,
    GraphError,
    VertexSet,
    are_isomorphic,
    bits,
    complement,
)

CASE1_EVEN = "CASE1_EVEN"
CASE1_ODD = "CASE1_ODD"
CASE2 = "CASE2"
ALL_ISOLATES = "ALL_ISOLATES"


class HStarError(GraphError):
    """Raised when the construction cannot be carried out."""


@dataclass(frozen=True)
class TargetDecomposition:
    g_prime: Graph
    t: int
    n: int
    comp_edges: tuple[tuple[int, int], ...]
    base_vertices: tuple[int, ...]
    isolates: tuple[int, ...]

    @property
    def m_bar(self) -> int:
        return len(self.comp_edges)

    @property
    def case(self) -> str:
        if self.n == 0:
            return ALL_ISOLATES
        if not self.comp_edges:
            return CASE1_EVEN if self.n % 2 == 0 else CASE1_ODD
        return CASE2


@dataclass(frozen=True)
class Gadget:
    """An added host vertex: ``u`` for the odd complete case, else a non-edge blocker."""

    vertex: int
    part: int
    missing: tuple[int, ...]


@dataclass(frozen=True)
class HStarResult:
    host: Graph
    pi_star: Partition
    case_tag: str
    matching: tuple[tuple[int, int], ...]
    gadget_map: tuple[Gadget, ...]
    w_vertices: tuple[int, ...]
    base_order: tuple[int, ...]
    predicted_order: int
    predicted_size: int
    predicted_size_corrected: int
    actual_order: int
    actual_size: int


@dataclass
class AuditReport:
    partition_valid: bool
    cg_matches: bool
    iso_matches: bool
    order_size_match_table: bool
    corrected_size_match: bool
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.partition_valid and self.cg_matches and self.corrected_size_match


def decompose_target(g: Graph) -> TargetDecomposition:
    degrees = g.degrees()
    base = tuple(v for v in range(g.n) if degrees[v] > 0)
    isolates = tuple(v for v in range(g.n) if degrees[v] == 0)
    g_prime = g.induced(base)
    comp = complement(g_prime)
    return TargetDecomposition(g_prime, len(isolates), len(base), tuple(comp.edges()), base, isolates)


def predicted_metrics(d: TargetDecomposition) -> tuple[int, int, int]:
    """Order and size from the printed table, plus the size with w-w edges counted once.

    Returns ``(order, size_verbatim, size_corrected)``. The all-isolates
    target uses the even row with ``n = 0``.
    """
    n, t, mbar = d.n, d.t, d.m_bar
    case = d.case
    if case in (CASE1_EVEN, ALL_ISOLATES):
        order = n + t
        size = comb(n, 2) - n // 2 + t * (order - 1)
    elif case == CASE1_ODD:
        order = n + t + 1
        size = comb(n, 2) - (n - 1) // 2 + n - 2 + t * (order - 1)
    else:
        if n < 3:
            raise HStarError(f"table row for non-complete G' needs n >= 3, got n={n} with {mbar} complement edges")
        order = n + mbar + t
        size = comb(n, 2) - n // 2 + mbar * (n - 3) + t * (order - 1)
    return order, size, size - comb(t, 2)


def _pairing(order: list[int], adjacent) -> list[tuple[int, int]]:
    # Greedy: pair each vertex with the next free one it is adjacent to in G',
    # falling back to the next free one.
    free = list(order)
    pairs = []
    while len(free) >= 2:
        a = free.pop(0)
        pick = next((i for i, b in enumerate(free) if adjacent(a, b)), 0)
        pairs.append((a, free.pop(pick)))
    return pairs


def build_hstar(g: Graph) -> HStarResult:
    d = decompose_target(g)
    case = d.case
    order, size_verbatim, size_corrected = predicted_metrics(d)
    if order > MAX_N:
        raise CapExceededError(f"host order {order} exceeds MAX_N={MAX_N}")

    full_in_gp = {d.base_vertices[i] for i in range(d.n) if d.g_prime.degree(i) == d.n - 1}
    base = list(d.base_vertices)
    if case == CASE2 and base[-1] in full_in_gp:
        designated = max(v for v in base if v not in full_in_gp)
        base.remove(designated)
        base.append(designated)
    if case == CASE2 and base[-1] in full_in_gp:
        raise HStarError("no non-full vertex available for the unpaired base position")

    def adjacent(a: int, b: int) -> bool:
        return g.has_edge(a, b)

    pairable = base if d.n % 2 == 0 else base[:-1]
    matching = _pairing(pairable, adjacent) if case == CASE2 else [
        (pairable[i], pairable[i + 1]) for i in range(0, len(pairable), 2)
    ]

    size = g.n + (1 if case == CASE1_ODD else 0) + (d.m_bar if case == CASE2 else 0)
    if size > MAX_N:
        raise CapExceededError(f"host order {size} exceeds MAX_N={MAX_N}")
    rows = [0] * size
    blocks = {v: 1 << v for v in range(g.n)}

    def link(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    def unlink(a: int, b: int) -> None:
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)

    for i, a in enumerate(base):
        for b in base[i + 1:]:
            link(a, b)
    for a, b in matching:
        unlink(a, b)

    gadgets: list[Gadget] = []
    nxt = g.n
    if case == CASE1_ODD:
        u, vn, vk = nxt, base[-1], base[0]
        for b in base:
            if b != vn:
                link(u, b)
        blocks[vk] |= 1 << u
        unlink(u, vk)
        gadgets.append(Gadget(u, vk, (vn,)))
        nxt += 1
    elif case == CASE2:
        # parts whose base vertex has a non-neighbour in G' stay non-dominating
        # whatever they host, so they are tried first
        pref = sorted(base, key=lambda v: (v in full_in_gp, v))
        present = sum(1 << v for v in base)
        pending = []
        for j0, k0 in d.comp_edges:
            j, k = d.base_vertices[j0], d.base_vertices[k0]
            x = nxt
            nxt += 1
            present |= 1 << x
            for b in base:
                if b not in (j, k):
                    link(x, b)
            pending.append((x, j, k))
        # All gadgets exist before any is placed. Placing a gadget only changes
        # the coverage of its own part, and the universal vertices added later
        # are covered by every base vertex, so each check below is final.
        for x, j, k in pending:
            host_part = None
            for i in pref:
                if i in (j, k):
                    continue
                unlink(x, i)
                cov = 0
                for y in bits(blocks[i] | (1 << x)):
                    cov |= rows[y] | (1 << y)
                if cov & present != present:
                    host_part = i
                    break
                link(x, i)
            if host_part is None:
                raise HStarError(f"no eligible part can host the gadget for non-edge ({j},{k})")
            blocks[host_part] |= 1 << x
            gadgets.append(Gadget(x, host_part, (j, k)))

    for w in d.isolates:
        for y in range(size):
            if y != w:
                link(w, y)

    host = Graph(size, tuple(rows))
    pi_star = Partition.from_blocks(size, [VertexSet(blocks[v], size) for v in range(g.n)])
    return HStarResult(
        host=host,
        pi_star=pi_star,
        case_tag=case,
        matching=tuple(matching),
        gadget_map=tuple(gadgets),
        w_vertices=d.isolates,
        base_order=tuple(base),
        predicted_order=order,
        predicted_size=size_verbatim,
        predicted_size_corrected=size_corrected,
        actual_order=host.n,
        actual_size=host.m,
    )


def validate_hstar(g: Graph, r: HStarResult) -> AuditReport:
    """Audit a construction; every problem found becomes a violation line.

    ``cg_matches`` compares the coalition-pair graph with ``g`` under the
    correspondence part ``i`` <-> target vertex ``i`` and is computed even when
    the partition is not a valid c-partition.
    """
    host, pi = r.host, r.pi_star
    violations: list[str] = []
    notes: list[str] = []
    a = assess_partition(host, pi)
    for i, cls in enumerate(a.part_class):
        if cls == DOMINATING_NON_SINGLETON:
            violations.append(f"part V_{i} = {pi.parts[i]} is dominating and not a singleton")
        elif cls == ORPHAN:
            violations.append(f"part V_{i} = {pi.parts[i]} is non-dominating with no coalition partner")

    cg = Graph.from_edges(len(pi), a.coalition_pairs)
    cg_matches = len(pi) == g.n and cg == g
    if not cg_matches:
        extra = sorted(set(cg.edges()) - set(g.edges())) if len(pi) == g.n else []
        missing = sorted(set(g.edges()) - set(cg.edges())) if len(pi) == g.n else []
        violations.append(f"coalition graph differs from target: extra={extra} missing={missing}")
    iso_matches = cg_matches or (cg.n == g.n and are_isomorphic(cg, g, cap=None))

    if r.case_tag == CASE2:
        for v in r.base_order:
            if host.degree(v) == host.n - 1:
                violations.append(f"base vertex {v} is full in the host")
        for gad in r.gadget_map:
            j, k = gad.missing
            if dominates(host, pi.parts[j].mask | pi.parts[k].mask):
                violations.append(f"non-edge ({j},{k}): V_{j} and V_{k} together dominate")

    order_ok = r.actual_order == r.predicted_order
    table_ok = order_ok and r.actual_size == r.predicted_size
    corrected_ok = order_ok and r.actual_size == r.predicted_size_corrected
    if not order_ok:
        violations.append(f"order {r.actual_order} differs from table order {r.predicted_order}")
    if not corrected_ok and order_ok:
        violations.append(f"size {r.actual_size} differs from corrected table size {r.predicted_size_corrected}")
    if corrected_ok and not table_ok:
        notes.append(
            f"printed size {r.predicted_size} counts the {r.predicted_size - r.predicted_size_corrected} "
            f"edges among universal vertices twice; built size is {r.actual_size}"
        )
    return AuditReport(a.valid, cg_matches, iso_matches, table_ok, corrected_ok, violations, notes)

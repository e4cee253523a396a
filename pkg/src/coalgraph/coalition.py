"""Coalitions, c-partition assessment and exact coalition number/count search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import kernels
from .domination import (
    DominationError,
    domatic_number,
    dominates,
    shrink_to_minimal,
    split_dominating,
)
from .graph_core import (
    Graph,
    GraphError,
    VertexSet,
    bits,
    check_cap,
    vertex_roles,
)

SEARCH_CAP_PARTITION = 12

SINGLETON_DOMINATING = "singleton_dominating"
COALITION_MEMBER = "coalition_member"
ORPHAN = "orphan_non_dominating"
DOMINATING_NON_SINGLETON = "invalid_dominating_non_singleton"


class CoalitionError(GraphError):
    """Raised for malformed partitions or unmet coalition preconditions."""


@dataclass(frozen=True)
class Partition:
    """Ordered vertex partition; parts sorted by smallest member."""

    parts: tuple[VertexSet, ...]
    host_n: int

    def __post_init__(self) -> None:
        seen = 0
        for part in self.parts:
            if part.host_n != self.host_n:
                raise CoalitionError("partition mixes vertex sets from different hosts")
            if not part.mask:
                raise CoalitionError("partition has an empty part")
            if seen & part.mask:
                raise CoalitionError(f"vertex {VertexSet(seen & part.mask, self.host_n).min()} appears in two parts")
            seen |= part.mask
        if seen != (1 << self.host_n) - 1:
            missing = VertexSet(((1 << self.host_n) - 1) & ~seen, self.host_n)
            raise CoalitionError(f"partition does not cover vertices {missing}")
        mins = [p.min() for p in self.parts]
        if mins != sorted(mins):
            raise CoalitionError("parts must be ordered by smallest member; use Partition.from_blocks")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int] | VertexSet]) -> "Partition":
        parts = [b if isinstance(b, VertexSet) else VertexSet.of(n, b) for b in blocks]
        for p in parts:
            if not p.mask:
                raise CoalitionError("partition has an empty part")
        parts.sort(key=VertexSet.min)
        return cls(tuple(parts), n)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "Partition":
        n = len(rgs)
        masks = [0] * (max(rgs, default=-1) + 1)
        for v, b in enumerate(rgs):
            masks[b] |= 1 << v
        return cls.from_blocks(n, [VertexSet(m, n) for m in masks])

    @classmethod
    def parse(cls, text: str, n: int) -> "Partition":
        """Parse the ``0,5|1|2|3|4`` grammar; whitespace is ignored."""
        s = "".join(text.split())
        if not s:
            if n == 0:
                return cls((), 0)
            raise CoalitionError("empty partition text")
        blocks = []
        for chunk in s.split("|"):
            try:
                members = [int(x) for x in chunk.split(",")]
            except ValueError as exc:
                raise CoalitionError(f"bad partition part {chunk!r}") from exc
            if len(set(members)) != len(members):
                raise CoalitionError(f"repeated vertex in part {chunk!r}")
            blocks.append(members)
        return cls.from_blocks(n, blocks)

    def rgs(self) -> tuple[int, ...]:
        out = [0] * self.host_n
        for i, p in enumerate(self.parts):
            for v in p:
                out[v] = i
        return tuple(out)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, p.members())) for p in self.parts)


@dataclass(frozen=True)
class PartitionAssessment:
    valid: bool
    part_class: tuple[str, ...]
    coalition_pairs: tuple[tuple[int, int], ...]
    pair_count: int


@dataclass(frozen=True)
class SearchOutcome:
    value: int | None
    witness: Partition | None
    partitions_examined: int


@dataclass(frozen=True)
class CoalitionGraphResult:
    cg: Graph
    part_labels: tuple[str, ...]


def forms_coalition(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    for s in (a, b):
        if s.host_n != g.n:
            raise CoalitionError("vertex set host does not match graph")
        if not s.mask:
            raise CoalitionError("coalition sets must be nonempty")
    if a.mask & b.mask:
        raise CoalitionError(f"coalition sets {a} and {b} overlap")
    return not dominates(g, a.mask) and not dominates(g, b.mask) and dominates(g, a.mask | b.mask)


def assess_partition(g: Graph, p: Partition) -> PartitionAssessment:
    if p.host_n != g.n:
        raise CoalitionError(f"partition over {p.host_n} vertices used with a graph on {g.n}")
    dom = [dominates(g, part.mask) for part in p.parts]
    k = len(p.parts)
    pairs = []
    for i in range(k):
        if dom[i]:
            continue
        for j in range(i + 1, k):
            if not dom[j] and dominates(g, p.parts[i].mask | p.parts[j].mask):
                pairs.append((i, j))
    partnered = {i for pair in pairs for i in pair}
    classes = []
    for i, part in enumerate(p.parts):
        if dom[i]:
            classes.append(SINGLETON_DOMINATING if len(part) == 1 else DOMINATING_NON_SINGLETON)
        else:
            classes.append(COALITION_MEMBER if i in partnered else ORPHAN)
    valid = all(c in (SINGLETON_DOMINATING, COALITION_MEMBER) for c in classes)
    return PartitionAssessment(valid, tuple(classes), tuple(pairs), len(pairs))


@lru_cache(maxsize=4096)
def _search(n: int, closed: tuple[int, ...]):
    return kernels.search_partitions(list(closed), n)


def _run_search(g: Graph, cap: int | None):
    check_cap(g.n, cap, "coalition partition search")
    return _search(g.n, g.closed_rows())


def coalition_number(g: Graph, cap: int | None = SEARCH_CAP_PARTITION) -> SearchOutcome:
    """C(G): the most parts in any c-partition, or ``None`` if there is none."""
    parts, rgs, _, _, examined = _run_search(g, cap)
    if parts < 0:
        return SearchOutcome(None, None, examined)
    return SearchOutcome(parts, Partition.from_rgs(rgs), examined)


def coalition_count(g: Graph, cap: int | None = SEARCH_CAP_PARTITION) -> SearchOutcome:
    """c(G): the most coalition pairs inside any single c-partition."""
    _, _, pairs, rgs, examined = _run_search(g, cap)
    if pairs < 0:
        return SearchOutcome(None, None, examined)
    return SearchOutcome(pairs, Partition.from_rgs(rgs), examined)


def iter_cpartitions(g: Graph, cap: int | None = SEARCH_CAP_PARTITION) -> Iterator[tuple[Partition, int]]:
    """Every valid c-partition with its coalition-pair count, in RGS order."""
    check_cap(g.n, cap, "coalition partition enumeration")
    for rgs, _, pairs, valid in kernels.walk_partitions(list(g.closed_rows()), g.n):
        if valid:
            yield Partition.from_rgs(rgs), pairs


def max_order_partitions(g: Graph, cap: int | None = SEARCH_CAP_PARTITION) -> list[Partition]:
    """All c-partitions with C(G) parts (may be many; meant for small n)."""
    found: list[Partition] = []
    best = -1
    for p, _ in iter_cpartitions(g, cap):
        if len(p) > best:
            best, found = len(p), [p]
        elif len(p) == best:
            found.append(p)
    return found


def coalition_graph(g: Graph, p: Partition) -> CoalitionGraphResult:
    a = assess_partition(g, p)
    if not a.valid:
        bad = [f"{p.parts[i]} is {c}" for i, c in enumerate(a.part_class) if c in (ORPHAN, DOMINATING_NON_SINGLETON)]
        raise CoalitionError("not a c-partition: " + "; ".join(bad))
    return CoalitionGraphResult(
        Graph.from_edges(len(p), a.coalition_pairs),
        tuple(str(part) for part in p.parts),
    )


def is_sp_graph(g: Graph) -> bool:
    """True when the all-singletons partition is a c-partition."""
    full = g.full_mask
    closed = g.closed_rows()
    nondom = [v for v in range(g.n) if closed[v] != full]
    for v in nondom:
        if not any(u != v and closed[v] | closed[u] == full for u in nondom):
            return False
    return True


def cpartition_from_domatic(g: Graph) -> tuple[Partition, int]:
    """Build a c-partition with at least d(G) - f coalitions from a domatic partition.

    Full vertices become singleton parts. The remaining dominating classes
    are shrunk to minimal dominating sets (surplus vertices fall into the last
    class) and split into two non-dominating halves. If the last class is not
    minimal, its leftover ``W`` either stays as its own part when it has a
    coalition partner or is merged into the second half of the split core.
    """
    n = g.n
    roles = vertex_roles(g)
    if roles.isolated.mask:
        raise CoalitionError(f"graph has isolated vertices {roles.isolated}")
    dom = domatic_number(g)
    f = roles.full_count
    bound = dom.d - f
    full_mask = roles.full.mask

    singles = [VertexSet(1 << v, n) for v in bits(full_mask)]
    classes: list[int] = []
    remnant = 0
    for part in dom.witness:
        rest = part.mask & ~full_mask
        if not rest:
            continue
        if dominates(g, rest):
            classes.append(rest)
        else:
            remnant |= rest
    if remnant:
        if classes:
            classes[-1] |= remnant
        else:
            # Non-full vertices always dominate the full ones, so the union of
            # all of them is itself dominating.
            if not dominates(g, remnant):
                raise DominationError("non-full vertices fail to dominate; domatic witness inconsistent")
            classes.append(remnant)
    if len(singles) + len(classes) < dom.d:
        raise AssertionError("regrouped domatic partition lost classes")

    parts: list[VertexSet] = list(singles)
    spill = 0
    for mask in classes[:-1]:
        core = shrink_to_minimal(g, VertexSet(mask, n))
        spill |= mask & ~core.mask
        parts.extend(split_dominating(g, core))
    if classes:
        last = VertexSet(classes[-1] | spill, n)
        core = shrink_to_minimal(g, last)
        a, b = split_dominating(g, core)
        leftover = last.mask & ~core.mask
        if not leftover:
            parts.extend((a, b))
        else:
            if dominates(g, leftover):
                raise AssertionError("leftover dominates: domatic number would exceed its maximum")
            others = parts + [a, b]
            partner = any(
                not dominates(g, o.mask) and dominates(g, o.mask | leftover) for o in others
            )
            if partner:
                parts.extend((a, b, VertexSet(leftover, n)))
            else:
                parts.extend((a, VertexSet(b.mask | leftover, n)))
    partition = Partition.from_blocks(n, parts)
    check = assess_partition(g, partition)
    if not check.valid or check.pair_count < bound:
        raise AssertionError(f"constructed partition {partition} is not a c-partition with >= {bound} coalitions")
    return partition, bound


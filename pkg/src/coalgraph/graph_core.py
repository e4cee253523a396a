"""Graph representation, codecs, named families, isomorphism and enumeration.

Graphs are small, simple and undirected. Vertices are the integers
``0..n-1`` and each adjacency row is an ``int`` bit mask, so set algebra on
neighbourhoods is plain bitwise arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import kernels

MAX_N = 24
ISO_CAP = 10
ENUM_CAP = 7
GRAPH6_MAX_N = 62

FAMILY_NAMES = ("path", "cycle", "complete", "star", "empty", "full_plus_independents")
FAMILY_ALIASES = {"fpq": "full_plus_independents"}


class GraphError(ValueError):
    """Base class for invalid graph input or arguments."""


class GraphParseError(GraphError):
    """Raised when edge-list or graph6 text is malformed."""


class CapExceededError(GraphError):
    """Raised when an exact search is asked to run above its size cap."""


def check_cap(n: int, cap: int | None, what: str) -> None:
    if cap is not None and n > cap:
        raise CapExceededError(f"{what}: n={n} exceeds cap {cap}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Labeled simple undirected graph with bit-mask adjacency rows."""

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        n, adj = self.n, self.adj
        if n < 0:
            raise GraphError("negative vertex count")
        if n > MAX_N:
            raise CapExceededError(f"graph order {n} exceeds MAX_N={MAX_N}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        limit = 1 << n
        total = 0
        for v, row in enumerate(adj):
            if row < 0 or row >= limit:
                raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += popcount(row)
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def closed_rows(self) -> tuple[int, ...]:
        return tuple(row | (1 << v) for v, row in enumerate(self.adj))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    def edge_mask(self) -> int:
        """Upper-triangle bits in column order; bit 0 is the pair (0,1)."""
        mask, k = 0, 0
        for j in range(1, self.n):
            row = self.adj[j]
            for i in range(j):
                if row >> i & 1:
                    mask |= 1 << k
                k += 1
        return mask

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        k = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return cls(n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled 0.. in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph(self, 'graph6')})"


@dataclass(frozen=True)
class VertexSet:
    """Subset of a host graph's vertices stored as a bit mask."""

    mask: int
    host_n: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.host_n:
            raise GraphError(f"vertex set {self.mask:#x} has members outside 0..{self.host_n - 1}")

    @classmethod
    def of(cls, host: Graph | int, vertices: Iterable[int]) -> "VertexSet":
        n = host if isinstance(host, int) else host.n
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(mask, n)

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        _same_host(self, other)
        return VertexSet(self.mask | other.mask, self.host_n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        _same_host(self, other)
        return VertexSet(self.mask & other.mask, self.host_n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        _same_host(self, other)
        return VertexSet(self.mask & ~other.mask, self.host_n)

    def min(self) -> int:
        if not self.mask:
            raise GraphError("empty vertex set has no minimum")
        return (self.mask & -self.mask).bit_length() - 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members())) + "}"


def _same_host(a: VertexSet, b: VertexSet) -> None:
    if a.host_n != b.host_n:
        raise GraphError(f"vertex sets over different hosts ({a.host_n} vs {b.host_n})")


@dataclass(frozen=True)
class VertexRoles:
    full: VertexSet
    isolated: VertexSet
    pendant: VertexSet
    degrees: tuple[int, ...]
    min_degree: int
    full_count: int


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``name:arg[,arg...]``, e.g. ``star:5`` or ``fpq:2,2,1``."""
        name, _, args = text.partition(":")
        name = FAMILY_ALIASES.get(name.strip(), name.strip())
        try:
            params = tuple(int(a) for a in args.split(",") if a.strip())
        except ValueError as exc:
            raise GraphError(f"bad family arguments in {text!r}") from exc
        return cls(name, params)


# ---------------------------------------------------------------- codecs


def parse_graph(text: str, format: str = "edge_list") -> Graph:
    if format == "edge_list":
        return _parse_edge_list(text)
    if format == "graph6":
        return _parse_graph6(text)
    raise GraphError(f"unknown graph format {format!r}")


def detect_format(text: str) -> str:
    """Guess the format from the first significant byte."""
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if s.startswith(">>graph6<<") or not s[0].isdigit():
            return "graph6"
        return "edge_list"
    return "edge_list"


def _parse_edge_list(text: str) -> Graph:
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise GraphParseError("line 1: missing header 'n m'")
    no, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise GraphParseError(f"line {no}: malformed header {header!r}, expected 'n m'")
    n, m = int(fields[0]), int(fields[1])
    if n > MAX_N:
        raise CapExceededError(f"line {no}: n={n} exceeds MAX_N={MAX_N}")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(f"line {no}: header declares {m} edges, found {len(body)}")
    rows = [0] * n
    for no, line in body:
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphParseError(f"line {no}: malformed edge {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise GraphParseError(f"line {no}: vertex index out of range for n={n}")
        if u == v:
            raise GraphParseError(f"line {no}: self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise GraphParseError(f"line {no}: duplicate edge {u} {v}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("byte 0: empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"byte {pos}: invalid graph6 character {chr(byte)!r}")
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise GraphParseError("byte 0: graph6 long size form is unsupported")
    if n > MAX_N:
        raise CapExceededError(f"byte 0: n={n} exceeds MAX_N={MAX_N}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise GraphParseError(
            f"byte {min(len(data), need + 1)}: expected {need} data bytes for n={n}, got {len(data) - 1}"
        )
    stream = 0
    for byte in data[1:]:
        stream = (stream << 6) | (byte - 63)
    pad = need * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise GraphParseError(f"byte {len(data) - 1}: nonzero padding bits")
    stream >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def encode_graph(g: Graph, format: str = "edge_list") -> str:
    if format == "edge_list":
        edges = g.edges()
        return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges])
    if format == "graph6":
        return _encode_graph6(g)
    raise GraphError(f"unknown graph format {format!r}")


def _encode_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    out = [chr(n + 63)]
    group, filled = 0, 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            group = (group << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


# ---------------------------------------------------------- combinators


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def combine(g1: Graph, g2: Graph, mode: str = "union") -> Graph:
    """Disjoint union or join; ``g2`` is shifted to ``g1.n..``."""
    if mode not in ("union", "join"):
        raise GraphError(f"unknown combine mode {mode!r}")
    n = g1.n + g2.n
    if n > MAX_N:
        raise CapExceededError(f"combined order {n} exceeds MAX_N={MAX_N}")
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = list(g1.adj) + [row << g1.n for row in g2.adj]
    if mode == "join":
        for v in range(g1.n):
            rows[v] |= right
        for v in range(g1.n, n):
            rows[v] |= left
    return Graph(n, tuple(rows))


def make_family(spec: FamilySpec) -> Graph:
    name, p = spec.name, spec.params
    name = FAMILY_ALIASES.get(name, name)

    def need(count: int) -> None:
        if len(p) != count or any(x < 0 for x in p):
            raise GraphError(f"family {name} expects {count} non-negative integer parameter(s), got {list(p)}")

    if name == "path":
        need(1)
        if p[0] < 1:
            raise GraphError("path needs n >= 1")
        return Graph.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if name == "cycle":
        need(1)
        if p[0] < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph.from_edges(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if name == "complete":
        need(1)
        return complement(Graph.empty(p[0]))
    if name == "star":
        need(1)
        if p[0] < 1:
            raise GraphError("star needs n >= 1")
        return Graph.from_edges(p[0], [(0, i) for i in range(1, p[0])])
    if name == "empty":
        need(1)
        return Graph.empty(p[0])
    if name == "full_plus_independents":
        need(3)
        f, indep, q = p
        core = combine(make_family(FamilySpec("complete", (f,))), Graph.empty(indep), "join")
        return combine(core, Graph.empty(q), "union")
    raise GraphError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


def vertex_roles(g: Graph) -> VertexRoles:
    degrees = tuple(g.degrees())
    full = isolated = pendant = 0
    for v, d in enumerate(degrees):
        if d == g.n - 1:
            full |= 1 << v
        if d == 0:
            isolated |= 1 << v
        if d == 1:
            pendant |= 1 << v
    return VertexRoles(
        full=VertexSet(full, g.n),
        isolated=VertexSet(isolated, g.n),
        pendant=VertexSet(pendant, g.n),
        degrees=degrees,
        min_degree=min(degrees, default=0),
        full_count=popcount(full),
    )


# ---------------------------------------------------------- isomorphism


def canonical_form(g: Graph, cap: int | None = ISO_CAP) -> Graph:
    """Relabeling of ``g`` whose upper-triangle bit string is lexicographically least."""
    check_cap(g.n, cap, "canonical labeling")
    return _canonical_form(g.n, g.adj)


@lru_cache(maxsize=1 << 16)
def _canonical_form(n: int, adj: tuple[int, ...]) -> Graph:
    order = kernels.canonical_order(list(adj), n)
    perm = [0] * n
    for pos, v in enumerate(order):
        perm[v] = pos
    return Graph(n, adj).relabel(perm)


def canonical_certificate(g: Graph, cap: int | None = ISO_CAP) -> bytes:
    """graph6 bytes of the canonical form; equal certificates iff isomorphic."""
    return _encode_graph6(canonical_form(g, cap)).encode("ascii")


def are_isomorphic(g1: Graph, g2: Graph, cap: int | None = ISO_CAP) -> bool:
    check_cap(max(g1.n, g2.n), cap, "isomorphism test")
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_certificate(g1, cap) == canonical_certificate(g2, cap)


# ---------------------------------------------------------- enumeration


def enumerate_graphs(n: int, mode: str = "up_to_isomorphism", cap: int | None = None) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices, or one representative per class.

    Labeled mode walks edge masks in increasing order. Isomorphism mode yields
    canonical forms sorted by certificate.
    """
    if n < 0:
        raise GraphError("n must be non-negative")
    if mode == "labeled":
        check_cap(n, cap if cap is not None else MAX_N, "labeled enumeration")
        return (Graph.from_edge_mask(n, mask) for mask in range(1 << (n * (n - 1) // 2)))
    if mode == "up_to_isomorphism":
        check_cap(n, ENUM_CAP if cap is None else cap, "isomorphism-class enumeration")
        return iter(_iso_classes(n))
    raise GraphError(f"unknown enumeration mode {mode!r}")


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[Graph, ...]:
    # Every n-vertex graph is an (n-1)-vertex class representative plus a new
    # vertex with some neighbourhood, so extending representatives is complete.
    if n == 0:
        return (Graph.empty(0),)
    found: dict[bytes, Graph] = {}
    for base in _iso_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
            rows.append(nbrs)
            canon = _canonical_form(n, tuple(rows))
            key = _encode_graph6(canon).encode("ascii")
            found.setdefault(key, canon)
    return tuple(found[k] for k in sorted(found))


def random_relabeling(g: Graph, rng) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)

"""Exhaustive verification of coalition claims over small-graph universes.

Each check maps one graph to an outcome: ``ok``, ``fail`` (a counterexample),
``vacuous`` (the claim's hypothesis does not apply) or ``none`` (the graph has
no c-partition, tallied separately and never counted against inequalities).
Reports are plain text and byte-identical across runs and worker counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .coalition import (
    assess_partition,
    coalition_count,
    coalition_number,
    cpartition_from_domatic,
    is_sp_graph,
    max_order_partitions,
)
from .domination import domatic_number, independence_number
from .graph_core import (
    ENUM_CAP,
    FamilySpec,
    Graph,
    GraphError,
    are_isomorphic,
    canonical_certificate,
    combine,
    encode_graph,
    enumerate_graphs,
    make_family,
    vertex_roles,
)
from .hstar import build_hstar, validate_hstar
from .oracle import naive_coalition_values

CHECK_IDS = ("T31", "T32", "COR", "T34", "R35", "T36", "HSTAR", "ORACLE")
FILTERS = ("all", "no_isolates", "one_full_and_delta1", "sp_no_full", "family_membership")

DEFAULT_FILTER = {
    "T31": "no_isolates",
    "T32": "all",
    "COR": "all",
    "T34": "one_full_and_delta1",
    "R35": "all",
    "T36": "sp_no_full",
    "HSTAR": "all",
    "ORACLE": "all",
}

EXPECTED = {
    "T31": "c>=d-f and constructive>=d-f",
    "T32": "c==1 <=> alpha==n-f",
    "COR": "c==1 <=> G~(K_f'+pK_1)uqK_1",
    "T34": "c==s-2 and CG~K_1uK_{1,s-2}",
    "R35": "c>=ceil((C-f)/2)",
    "T36": "c>=alpha",
    "HSTAR": "valid and CG==G and size==corrected_table",
    "ORACLE": "engine(C,c)==naive(C,c)",
}


class HarnessError(GraphError):
    """Unknown check id, bad universe or cap violation."""


@dataclass(frozen=True)
class UniverseSpec:
    max_n: int
    mode: str = "up_to_isomorphism"
    filter: str = "all"
    min_n: int = 1

    def label(self) -> str:
        short = "iso" if self.mode == "up_to_isomorphism" else "labeled"
        if self.min_n <= 1:
            return f"{short}:n<={self.max_n}"
        if self.min_n == self.max_n:
            return f"{short}:n={self.max_n}"
        return f"{short}:{self.min_n}<=n<={self.max_n}"


@dataclass(frozen=True)
class Counterexample:
    g6: str
    observed: str
    expected: str


@dataclass
class TheoremReport:
    check_id: str
    universe: UniverseSpec
    graphs_checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    no_cpartition: int = 0
    vacuous: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def render(self) -> str:
        lines = [f"check={self.check_id} universe={self.universe.label()} filter={self.universe.filter}"]
        lines += [f"g6={c.g6} observed={c.observed} expected={c.expected}" for c in self.counterexamples]
        lines.append(f"no_cpartition={self.no_cpartition}")
        lines.append(f"vacuous={self.vacuous}")
        lines.append(
            f"checked={self.graphs_checked} counterexamples={len(self.counterexamples)} "
            f"passed={'true' if self.passed else 'false'}"
        )
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------- universes


@lru_cache(maxsize=None)
def _family_index(n: int) -> dict[bytes, tuple[tuple[int, int, int], ...]]:
    index: dict[bytes, list[tuple[int, int, int]]] = {}
    for f in range(n + 1):
        for p in range(n - f + 1):
            q = n - f - p
            g = make_family(FamilySpec("full_plus_independents", (f, p, q)))
            index.setdefault(canonical_certificate(g, cap=None), []).append((f, p, q))
    return {k: tuple(v) for k, v in index.items()}


def family_parameters(g: Graph) -> tuple[tuple[int, int, int], ...]:
    """All (f', p, q) with g isomorphic to (K_f' + pK_1) u qK_1; empty if none."""
    return _family_index(g.n).get(canonical_certificate(g, cap=None), ())


def _passes_filter(g: Graph, name: str) -> bool:
    if name == "all":
        return True
    roles = vertex_roles(g)
    if name == "no_isolates":
        return not roles.isolated.mask
    if name == "one_full_and_delta1":
        return roles.full_count == 1 and roles.min_degree == 1
    if name == "sp_no_full":
        return roles.full_count == 0 and is_sp_graph(g)
    if name == "family_membership":
        return bool(family_parameters(g))
    raise HarnessError(f"unknown filter {name!r}; choose from {', '.join(FILTERS)}")


def build_universe(spec: UniverseSpec, cap: int | None = ENUM_CAP) -> Iterator[Graph]:
    if spec.filter not in FILTERS:
        raise HarnessError(f"unknown filter {spec.filter!r}; choose from {', '.join(FILTERS)}")
    if spec.mode not in ("labeled", "up_to_isomorphism"):
        raise HarnessError(f"unknown mode {spec.mode!r}")
    if spec.mode == "up_to_isomorphism" and cap is not None and spec.max_n > cap:
        raise HarnessError(f"isomorphism universes are capped at n={cap}; got max_n={spec.max_n}")
    for n in range(max(spec.min_n, 0), spec.max_n + 1):
        for g in enumerate_graphs(n, spec.mode, cap=None):
            if _passes_filter(g, spec.filter):
                yield g


# ---------------------------------------------------------------- checks


def _fmt(**kv) -> str:
    return ",".join(f"{k}={v}" for k, v in kv.items())


def _coalition_values(g: Graph) -> tuple[int | None, int | None]:
    return coalition_number(g, cap=None).value, coalition_count(g, cap=None).value


def evaluate(check_id: str, g: Graph, all_witnesses: bool = False) -> tuple[str, str]:
    """Return ``(status, observed)`` for one graph; deterministic."""
    roles = vertex_roles(g)
    f, n = roles.full_count, g.n

    if check_id == "ORACLE":
        engine = _coalition_values(g)
        naive = naive_coalition_values(g)
        status = "ok" if engine == naive else "fail"
        return status, _fmt(C=engine[0], c=engine[1], naive_C=naive[0], naive_c=naive[1])

    if check_id == "HSTAR":
        try:
            r = build_hstar(g)
        except GraphError as exc:
            return "fail", _fmt(error=str(exc).replace(" ", "_"))
        a = validate_hstar(g, r)
        obs = _fmt(
            case=r.case_tag,
            valid=a.partition_valid,
            cg_matches=a.cg_matches,
            order=r.actual_order,
            table_order=r.predicted_order,
            size=r.actual_size,
            corrected_size=r.predicted_size_corrected,
        )
        return ("ok" if a.passed else "fail"), obs

    C, c = _coalition_values(g)
    if check_id == "COR":
        params = family_parameters(g)
        member = bool(params)
        obs = _fmt(c=c, f=f, member=member, params="/".join(f"{a}:{b}:{q}" for a, b, q in params) or "-",
                   f_matches=any(a == f for a, _, _ in params))
        if c is None:
            return "none", obs
        return ("ok" if (c == 1) == member else "fail"), obs

    if C is None or c is None:
        return "none", _fmt(C=C, c=c)

    if check_id == "T31":
        if roles.isolated.mask:
            return "vacuous", _fmt(c=c)
        d = domatic_number(g, cap=None).d
        part, bound = cpartition_from_domatic(g)
        built = assess_partition(g, part)
        ok = c >= d - f and built.valid and built.pair_count >= bound
        return ("ok" if ok else "fail"), _fmt(c=c, d=d, f=f, constructive=built.pair_count)

    if check_id == "T32":
        alpha = independence_number(g, cap=None)
        ok = (c == 1) == (alpha == n - f)
        return ("ok" if ok else "fail"), _fmt(c=c, alpha=alpha, n=n, f=f)

    if check_id == "R35":
        bound = math.ceil((C - f) / 2)
        return ("ok" if c >= bound else "fail"), _fmt(c=c, C=C, f=f, bound=bound)

    if check_id == "T36":
        if f or not is_sp_graph(g):
            return "vacuous", _fmt(c=c)
        alpha = independence_number(g, cap=None)
        return ("ok" if c >= alpha else "fail"), _fmt(c=c, alpha=alpha)

    if check_id == "T34":
        if f != 1 or roles.min_degree != 1 or C < 2:
            return "vacuous", _fmt(C=C, c=c)
        s = C
        shape = combine(Graph.empty(1), make_family(FamilySpec("star", (s - 1,))), "union")
        witnesses = max_order_partitions(g, cap=None) if all_witnesses else [coalition_number(g, cap=None).witness]
        bad = 0
        for w in witnesses:
            a = assess_partition(g, w)
            cg = Graph.from_edges(len(w), a.coalition_pairs)
            if not are_isomorphic(cg, shape, cap=None):
                bad += 1
        ok = c == s - 2 and bad == 0
        return ("ok" if ok else "fail"), _fmt(s=s, c=c, witnesses=len(witnesses), bad_shape=bad)

    raise HarnessError(f"unknown check id {check_id!r}; choose from {', '.join(CHECK_IDS)}")


def _task(args: tuple[str, Graph, bool]) -> tuple[str, str, str]:
    check_id, g, all_witnesses = args
    status, observed = evaluate(check_id, g, all_witnesses)
    return status, observed, encode_graph(g, "graph6")


def run_check(check_id: str, spec: UniverseSpec, jobs: int = 1, all_witnesses: bool = False) -> TheoremReport:
    if check_id not in CHECK_IDS:
        raise HarnessError(f"unknown check id {check_id!r}; choose from {', '.join(CHECK_IDS)}")
    report = TheoremReport(check_id, spec)
    tasks = ((check_id, g, all_witnesses) for g in build_universe(spec))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_task, tasks, chunksize=16))
    else:
        results = [_task(t) for t in tasks]
    expected = EXPECTED[check_id]
    for status, observed, g6 in results:
        report.graphs_checked += 1
        if status == "fail":
            report.counterexamples.append(Counterexample(g6, observed, expected))
        elif status == "none":
            report.no_cpartition += 1
        elif status == "vacuous":
            report.vacuous += 1
    return report

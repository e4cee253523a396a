import pytest
from hypothesis import given

from coalgraph.coalition import (
    COALITION_MEMBER,
    ORPHAN,
    CoalitionError,
    Partition,
    assess_partition,
    coalition_count,
    coalition_graph,
    coalition_number,
    cpartition_from_domatic,
    forms_coalition,
    is_sp_graph,
    iter_cpartitions,
    max_order_partitions,
)
from coalgraph.domination import dominates, is_dominating
from coalgraph.graph_core import CapExceededError, Graph, VertexSet, combine, enumerate_graphs
from coalgraph.oracle import naive_coalition_values

from conftest import fam, graphs


def part(g, text):
    return Partition.parse(text, g.n)


# ---- partition type


def test_partition_parse_and_str():
    p = Partition.parse(" 1 | 3 | 0, 5 | 2 | 4 ", 6)
    assert str(p) == "0,5|1|2|3|4"
    assert p.rgs() == (0, 1, 2, 3, 4, 0)


@pytest.mark.parametrize("text", ["0,1|1,2", "0|1", "0,0|1,2", "0|a|2", "0||1,2"])
def test_partition_parse_errors(text):
    with pytest.raises(CoalitionError):
        Partition.parse(text, 3)


def test_partition_from_rgs_round_trip():
    p = Partition.from_rgs((0, 1, 0, 2, 1))
    assert str(p) == "0,2|1,4|3"
    assert Partition.from_rgs(p.rgs()) == p


# ---- forms_coalition


def test_coalition_c4_adjacent_singletons():
    g = fam("cycle:4")
    assert forms_coalition(g, VertexSet.of(g, [0]), VertexSet.of(g, [1]))


def test_coalition_k3_singletons_dominate():
    g = fam("complete:3")
    assert not forms_coalition(g, VertexSet.of(g, [0]), VertexSet.of(g, [1]))


def test_coalition_p6():
    g = fam("path:6")
    assert forms_coalition(g, VertexSet.of(g, [1]), VertexSet.of(g, [4]))


def test_coalition_errors():
    g = fam("cycle:4")
    with pytest.raises(CoalitionError):
        forms_coalition(g, VertexSet.of(g, [0, 1]), VertexSet.of(g, [1]))
    with pytest.raises(CoalitionError):
        forms_coalition(g, VertexSet(0, 4), VertexSet.of(g, [1]))


@given(graphs(min_n=2, max_n=7))
def test_coalition_symmetric_and_sound(g):
    a = VertexSet(g.edge_mask() & g.full_mask or 1, g.n)
    b = VertexSet(g.full_mask & ~a.mask, g.n)
    if not b.mask:
        return
    assert forms_coalition(g, a, b) == forms_coalition(g, b, a)
    if forms_coalition(g, a, b):
        assert is_dominating(g, a | b)
        assert not is_dominating(g, a) and not is_dominating(g, b)


# ---- assess_partition


def test_assess_c4_singletons():
    a = assess_partition(fam("cycle:4"), part(fam("cycle:4"), "0|1|2|3"))
    assert a.valid and a.pair_count == 6


def test_assess_p6_pi2():
    g = fam("path:6")
    a = assess_partition(g, part(g, "1|3|0,5|2|4"))
    assert a.valid and a.pair_count == 3


def test_assess_p6_singletons_invalid():
    g = fam("path:6")
    a = assess_partition(g, part(g, "0|1|2|3|4|5"))
    assert not a.valid
    assert a.part_class[0] == ORPHAN
    # no singleton joins {0} to a dominating pair
    assert all(not dominates(g, 1 | (1 << v)) for v in range(1, 6))


def test_assess_p6_pi3_has_four_coalitions():
    # the partition quoted with c(P_6)=5 only yields four coalitions
    g = fam("path:6")
    a = assess_partition(g, part(g, "1,3|5|0,2|4"))
    assert a.valid and a.pair_count == 4


def test_assess_flags_dominating_non_singleton():
    g = fam("star:4")
    a = assess_partition(g, part(g, "0,1|2,3"))
    assert not a.valid
    assert a.part_class[0] == "invalid_dominating_non_singleton"


def test_assess_rejects_wrong_host():
    with pytest.raises(CoalitionError):
        assess_partition(fam("path:3"), Partition.parse("0|1|2|3", 4))


# ---- C(G) and c(G)


def test_c4_values():
    g = fam("cycle:4")
    assert coalition_number(g).value == 4
    assert coalition_count(g).value == 6


def test_k5_values():
    g = fam("complete:5")
    assert coalition_number(g).value == 5
    assert coalition_count(g).value == 0


def test_p6_values():
    g = fam("path:6")
    assert coalition_number(g).value == 5
    out = coalition_count(g)
    assert out.value == 5
    assert str(out.witness) == "0,4|1,5|2|3"


def test_p6_quoted_witness_realises_five():
    g = fam("path:6")
    assert assess_partition(g, part(g, "0,4|1,5|2|3")).pair_count == 5


def test_p4_values():
    g = fam("path:4")
    assert coalition_number(g).value == coalition_count(g).value == 4


def test_search_cap():
    with pytest.raises(CapExceededError):
        coalition_number(fam("path:13"))


def test_witnesses_reassess():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            cn, cc = coalition_number(g), coalition_count(g)
            a = assess_partition(g, cn.witness)
            assert a.valid and len(cn.witness) == cn.value
            b = assess_partition(g, cc.witness)
            assert b.valid and b.pair_count == cc.value


def test_witness_is_lexicographically_least():
    for g in [fam("path:5"), fam("cycle:5"), fam("star:5"), combine(fam("path:3"), Graph.empty(2))]:
        valid = list(iter_cpartitions(g))
        top = max(len(p) for p, _ in valid)
        assert coalition_number(g).witness.rgs() == min(p.rgs() for p, _ in valid if len(p) == top)
        top_pairs = max(c for _, c in valid)
        assert coalition_count(g).witness.rgs() == min(p.rgs() for p, c in valid if c == top_pairs)


def test_engine_matches_naive_oracle():
    for n in range(0, 6):
        for g in enumerate_graphs(n, "labeled"):
            assert (coalition_number(g).value, coalition_count(g).value) == naive_coalition_values(g)


def test_count_equals_max_cg_edges():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            best = max(coalition_graph(g, p).cg.m for p, _ in iter_cpartitions(g))
            assert coalition_count(g).value == best


def test_none_outcome_is_first_class():
    out = coalition_number(Graph.empty(0))
    assert out.value == 0 and out.witness == Partition((), 0)


def test_max_order_partitions_k13():
    ps = max_order_partitions(fam("star:4"))
    assert {str(p) for p in ps} == {"0|1|2,3", "0|1,2|3", "0|1,3|2"}


# ---- coalition graph


def test_cg_c4_is_k4():
    g = fam("cycle:4")
    assert coalition_graph(g, part(g, "0|1|2|3")).cg == fam("complete:4")


def test_cg_k3_empty():
    g = fam("complete:3")
    assert coalition_graph(g, part(g, "0|1|2")).cg == Graph.empty(3)


def test_cg_p6_pi2():
    g = fam("path:6")
    res = coalition_graph(g, part(g, "1|3|0,5|2|4"))
    # parts in canonical order: {0,5},{1},{2},{3},{4}
    assert res.part_labels == ("{0,5}", "{1}", "{2}", "{3}", "{4}")
    assert res.cg.edges() == [(0, 2), (0, 3), (1, 4)]


def test_cg_rejects_invalid():
    g = fam("path:6")
    with pytest.raises(CoalitionError, match="orphan"):
        coalition_graph(g, part(g, "0|1|2|3|4|5"))


# ---- SP graphs


def test_sp_examples():
    assert is_sp_graph(fam("cycle:4"))
    assert not is_sp_graph(fam("path:6"))
    assert is_sp_graph(fam("complete:5"))


def test_sp_matches_definition():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            singles = Partition.from_blocks(n, [[v] for v in range(n)])
            assert is_sp_graph(g) == assess_partition(g, singles).valid


# ---- constructive partition


def test_cpartition_c4():
    p, bound = cpartition_from_domatic(fam("cycle:4"))
    assert str(p) == "0|1|2|3" and bound == 2


def test_cpartition_star():
    g = fam("star:5")
    p, bound = cpartition_from_domatic(g)
    a = assess_partition(g, p)
    assert bound == 1 and a.valid and a.pair_count >= 1


def test_cpartition_k5():
    g = fam("complete:5")
    p, bound = cpartition_from_domatic(g)
    assert bound == 0 and len(p) == 5
    assert assess_partition(g, p).pair_count == 0


def test_cpartition_rejects_isolates():
    with pytest.raises(CoalitionError):
        cpartition_from_domatic(combine(fam("path:3"), Graph.empty(1)))


def test_cpartition_leftover_branches_exercised():
    # graphs where the last domatic class is not minimal take the W branch
    seen = set()
    for n in range(2, 7):
        for g in enumerate_graphs(n):
            if 0 in g.degrees():
                continue
            p, bound = cpartition_from_domatic(g)
            a = assess_partition(g, p)
            assert a.valid and a.pair_count >= bound
            seen.add(all(c == COALITION_MEMBER or len(pt) == 1 for c, pt in zip(a.part_class, p.parts)))
    assert seen

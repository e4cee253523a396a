import pytest

from coalgraph.graph_core import parse_graph
from coalgraph.harness import (
    CHECK_IDS,
    HarnessError,
    UniverseSpec,
    build_universe,
    evaluate,
    family_parameters,
    run_check,
)

from conftest import fam


def universe(max_n, filt="all", min_n=1, mode="up_to_isomorphism"):
    return UniverseSpec(max_n, mode, filt, min_n)


def test_universe_iso_n4():
    assert len(list(build_universe(universe(4, min_n=4)))) == 11


def test_universe_no_isolates_n3():
    got = list(build_universe(universe(3, "no_isolates", min_n=3)))
    assert sorted(g.m for g in got) == [2, 3]


def test_universe_one_full_delta1_contains_k13():
    got = list(build_universe(universe(4, "one_full_and_delta1", min_n=4)))
    assert any(g.m == 3 and max(g.degrees()) == 3 for g in got)
    for g in got:
        assert min(g.degrees()) == 1 and sum(d == g.n - 1 for d in g.degrees()) == 1


def test_universe_labeled_counts():
    assert len(list(build_universe(universe(4, mode="labeled")))) == 1 + 2 + 8 + 64


def test_universe_rejects_bad_filter():
    with pytest.raises(HarnessError):
        list(build_universe(universe(3, "nope")))


def test_family_parameters():
    assert family_parameters(fam("star:4"))
    assert not family_parameters(fam("cycle:4"))


def test_label():
    assert universe(6).label() == "iso:n<=6"
    assert universe(4, min_n=4).label() == "iso:n=4"


def test_t34_on_k13():
    status, observed = evaluate("T34", fam("star:4"), all_witnesses=True)
    assert status == "ok"
    assert "s=3" in observed and "c=1" in observed and "witnesses=3" in observed


def test_r35_on_c4():
    status, observed = evaluate("R35", fam("cycle:4"))
    assert status == "ok" and "bound=2" in observed


def test_t36_two_isolated_vertices():
    status, observed = evaluate("T36", parse_graph("A?", "graph6"))
    assert status == "fail"
    assert observed == "c=1,alpha=2"


def test_unknown_check():
    with pytest.raises(HarnessError):
        run_check("T99", universe(3))


def test_counterexamples_reverify():
    for check in ("COR", "T36", "HSTAR"):
        report = run_check(check, universe(5))
        for cx in report.counterexamples:
            g = parse_graph(cx.g6, "graph6")
            assert evaluate(check, g)[0] == "fail"


@pytest.mark.parametrize("check", CHECK_IDS)
def test_report_is_deterministic(check):
    spec = universe(4)
    assert run_check(check, spec).render() == run_check(check, spec).render()


def test_parallel_matches_serial():
    spec = universe(6, "no_isolates")
    assert run_check("T31", spec, jobs=2).render() == run_check("T31", spec).render()


def test_report_footer():
    text = run_check("R35", universe(4)).render()
    assert text.splitlines()[0] == "check=R35 universe=iso:n<=4 filter=all"
    assert text.splitlines()[-1] == "checked=18 counterexamples=0 passed=true"

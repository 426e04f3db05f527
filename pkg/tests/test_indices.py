import pytest

from hchroma import galois as gal
from hchroma import indices as ix
from hchroma.graphs import (
    Embedding,
    NotFound,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_trees,
    find_embedding,
    path_graph,
)


@pytest.fixture(scope="module")
def paley5_series():
    return ix.PaleySeries(5)


def test_series_orders(paley5_series):
    assert paley5_series.level_order(0) == 25
    assert paley5_series.level_order(1) == 15625
    assert paley5_series.level_order(2) == 5**18


def test_induced_index_c5(paley5_series):
    res = ix.induced_index(cycle_graph(5), paley5_series, cap=1)
    assert res.value == 0 and res.exact
    assert "usedLevelZero" in res.flags
    assert isinstance(res.witness, Embedding)


def test_induced_index_k6(paley5_series):
    res = ix.induced_index(complete_graph(6), paley5_series, cap=1)
    assert res.value == 1
    assert res.refuted_levels == (0,)
    assert res.exact


def test_induced_index_k1(paley5_series):
    res = ix.induced_index(empty_graph(1), paley5_series, cap=1)
    assert res.value == 0


def test_refutation_determinism(paley5_series):
    res = ix.induced_index(complete_graph(6), paley5_series, cap=1)
    for level in res.refuted_levels:
        host = paley5_series.level_host(level)
        again = find_embedding(complete_graph(6), host, mode="induced")
        assert isinstance(again, NotFound)


def test_unsearchable_levels_flagged(paley5_series):
    res = ix.induced_index(complete_graph(7), paley5_series, cap=2, budget=10**6)
    # level 2 has 5^18 vertices and must be skipped, never searched
    if res.value is None:
        assert 2 in res.skipped_levels
    else:
        assert res.value <= 1 or 2 in res.skipped_levels


def test_subgraph_closed_form_examples(paley5_series):
    r20 = ix.subgraph_index(cycle_graph(20), paley5_series)
    assert r20.value == 0
    assert "usedClosedForm" in r20.flags and "usedLevelZero" in r20.flags
    assert isinstance(r20.witness, Embedding)

    r26 = ix.subgraph_index(cycle_graph(26), paley5_series)
    assert r26.value == 1 and "closedFormOnly" in r26.flags

    r10 = ix.subgraph_index(path_graph(10), paley5_series)
    assert r10.value == 0 and isinstance(r10.witness, Embedding)


def test_subgraph_le_induced(paley5_series):
    for g in [cycle_graph(5), complete_graph(4), path_graph(4), complete_graph(6)]:
        sub = ix.subgraph_index(g, paley5_series, cap=1)
        ind = ix.induced_index(g, paley5_series, cap=1)
        if sub.exact and ind.exact:
            assert sub.value <= ind.value


def test_shape_detection():
    assert ix.cycle_or_path_shape(cycle_graph(7)) == ("cycle", 7)
    assert ix.cycle_or_path_shape(path_graph(4)) == ("path", 4)
    assert ix.cycle_or_path_shape(empty_graph(1)) == ("path", 1)
    assert ix.cycle_or_path_shape(complete_graph(4)) is None
    assert ix.cycle_or_path_shape(empty_graph(2)) is None


def test_pancyclicity_p13():
    host = gal.paley_graph(gal.find_irreducible(13, 1))
    rep = ix.pancyclicity_certificate(host)
    assert rep.missing == () and rep.complete
    assert sorted(rep.cycle_map) == list(range(3, 14))
    for length, cycle in rep.cycles:
        assert len(cycle) == length
        for i, v in enumerate(cycle):
            assert host.adjacent(v, cycle[(i + 1) % length])


def test_pancyclicity_p5_refutes_short_cycles():
    host = gal.paley_graph(gal.find_irreducible(5, 1))
    rep = ix.pancyclicity_certificate(host)
    assert rep.missing == (3, 4)
    assert 5 in rep.cycle_map
    assert rep.complete


def test_pancyclicity_budget_reports_incomplete():
    host = gal.paley_graph(gal.find_irreducible(13, 1))
    rep = ix.pancyclicity_certificate(host, budget=5)
    assert not rep.complete


def test_distinguish_trees_collide_on_chromatic():
    t1, t2 = enumerate_trees(5)[:2]
    verdict = ix.distinguish(t1, t2, "chromatic_poly")
    assert not verdict.separated


def test_distinguish_csf_pair(csf_equal_pair):
    g1, g2 = csf_equal_pair
    assert not ix.distinguish(g1, g2, "x_k1").separated
    v2 = ix.distinguish(g1, g2, "x_k2")
    assert v2.separated and "class" in v2.witness


def test_distinguish_relabel_collides():
    g = cycle_graph(5)
    relabeled = g.relabel((4, 2, 0, 3, 1))
    for method in ("chromatic_poly", "x_k1", "hom_profile"):
        assert not ix.distinguish(g, relabeled, method).separated


def test_distinguish_profile(csf_equal_pair):
    g1, g2 = csf_equal_pair
    verdict = ix.distinguish(g1, g2, "hom_profile", max_host_order=5)
    assert verdict.separated and "host" in verdict.witness


def test_functional_index_csf_pair(csf_equal_pair):
    res = ix.functional_index(list(csf_equal_pair), ix.KneserSeries(5), max_levels=3)
    assert res.value == 2
    assert res.witness["lastResolvedPair"] == [0, 1]


def test_functional_index_singleton():
    res = ix.functional_index([cycle_graph(4)], ix.KneserSeries(4))
    assert res.value == 1


def test_functional_index_rejects_isomorphic_family():
    g = cycle_graph(5)
    with pytest.raises(Exception):
        ix.functional_index([g, g.relabel((1, 0, 2, 3, 4))], ix.KneserSeries(5))


def test_tree_scan_small():
    report = ix.tree_collision_scan(7)
    assert report["collisions"] == []
    assert report["treesChecked"] == 25
    # two orders with one tree each: nothing to compare
    assert ix.tree_collision_scan(2)["pairsChecked"] == 0


def test_index_result_json(paley5_series):
    res = ix.induced_index(cycle_graph(5), paley5_series, cap=1)
    data = res.to_json("induced_index", {"graph": "D~{"}, paley5_series.level_host(0))
    assert data["value"] == 0
    assert data["witness"]["mode"] == "induced"
    assert data["refutedLevels"] == []

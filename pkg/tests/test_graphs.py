import random

import pytest

from hchroma.graphs import (
    BudgetExceeded,
    Embedding,
    Graph6Error,
    GraphError,
    NotFound,
    SimpleGraph,
    canonical_form,
    canonical_relabel,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    enumerate_graphs,
    enumerate_trees,
    find_embedding,
    is_isomorphic_bruteforce,
    parse_graph6,
    path_graph,
    spanning_subgraphs,
    to_graph6,
)
from hchroma.hosts import ExplicitHost


# -- graph6 --------------------------------------------------------------


def test_graph6_smallest_codes():
    assert parse_graph6("@") == empty_graph(1)
    assert parse_graph6("A_") == path_graph(2)


def test_graph6_star_example():
    # decoded by hand from the bit layout: ten upper-triangle bits
    # 000000 1111, edges in column order, so the last four pairs light up
    g = parse_graph6("D?{")
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_graph6_roundtrip_against_networkx():
    nx = pytest.importorskip("networkx")
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            text = to_graph6(g)
            assert parse_graph6(text) == g
            ng = nx.from_graph6_bytes(text.encode())
            assert set(map(tuple, map(sorted, ng.edges()))) == set(g.edges())


def test_graph6_header_and_long_form():
    assert parse_graph6(">>graph6<<A_") == path_graph(2)
    text = to_graph6(empty_graph(63))
    assert text.startswith("~")
    assert parse_graph6(text).n == 63


@pytest.mark.parametrize(
    "bad",
    ["", "A", "A__", "A\x1c", "~~~~~", "D?{?"],
)
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(bad)
    assert err.value.offset >= 0


def test_graph6_too_many_vertices():
    # 65 vertices, long form header, no adjacency needed to trip the cap
    text = "~" + chr(63) + chr(64) + chr(64)
    with pytest.raises(Graph6Error):
        parse_graph6(text)


# -- construction invariants ----------------------------------------------


def test_adjacency_validation():
    with pytest.raises(GraphError):
        SimpleGraph(2, [0b10, 0])  # asymmetric
    with pytest.raises(GraphError):
        SimpleGraph(1, [0b1])  # loop
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(2, [(0, 0)])


def test_json_round_trip():
    g = SimpleGraph.from_edges(4, [(0, 2), (1, 3), (0, 3)])
    data = g.to_json()
    assert data["edges"] == [[0, 2], [0, 3], [1, 3]]
    assert SimpleGraph.from_json(data) == g


# -- canonical forms -------------------------------------------------------


def test_canonical_relabel_invariance():
    rng = random.Random(20260811)
    for g in [cycle_graph(5), path_graph(4), complete_graph(4), empty_graph(3)]:
        base = canonical_form(g).code
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)).code == base


def test_canonical_specific_permutation():
    c5 = cycle_graph(5)
    assert canonical_form(c5).code == canonical_form(c5.relabel((0, 2, 4, 1, 3))).code


def test_aut_orders():
    assert canonical_form(complete_graph(3)).aut_order == 6
    assert canonical_form(complete_graph(4)).aut_order == 24
    assert canonical_form(cycle_graph(5)).aut_order == 10
    assert canonical_form(path_graph(4)).aut_order == 2
    assert canonical_form(empty_graph(4)).aut_order == 24
    two_triangles = complete_graph(3).disjoint_union(complete_graph(3))
    assert canonical_form(two_triangles).aut_order == 72


def test_aut_order_divides_factorial():
    import math

    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert math.factorial(n) % canonical_form(g).aut_order == 0


def test_codes_match_bruteforce_isomorphism():
    for n in range(1, 6):
        graphs = enumerate_graphs(n)
        codes = [canonical_form(g).code for g in graphs]
        assert len(set(codes)) == len(graphs)
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert not is_isomorphic_bruteforce(graphs[i], graphs[j])


def test_csf_pair_not_isomorphic(csf_equal_pair):
    g1, g2 = csf_equal_pair
    assert canonical_form(g1).code != canonical_form(g2).code
    assert not is_isomorphic_bruteforce(g1, g2)


def test_canonical_relabel_is_representative():
    g = SimpleGraph.from_edges(6, [(0, 3), (3, 5), (1, 4)])
    rep = canonical_relabel(g)
    assert canonical_form(rep).code == canonical_form(g).code
    assert is_isomorphic_bruteforce(rep, g)


# -- enumeration ------------------------------------------------------------


def test_enumerate_graph_counts():
    for n, count in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]:
        assert len(enumerate_graphs(n)) == count


def test_enumerate_graphs_seven():
    assert len(enumerate_graphs(7)) == 1044


@pytest.mark.slow
def test_enumerate_graphs_eight():
    assert len(enumerate_graphs(8)) == 12346


def test_enumerate_graphs_cap():
    with pytest.raises(GraphError):
        enumerate_graphs(9)


def test_enumerate_trees_counts():
    for n, count in [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47)]:
        trees = enumerate_trees(n)
        assert len(trees) == count
        for t in trees:
            assert t.is_connected() and t.num_edges() == n - 1


# -- components -------------------------------------------------------------


def test_connected_components():
    g = path_graph(2).disjoint_union(empty_graph(1))
    comps = connected_components(g)
    assert [c.n for c in comps] == [2, 1]
    assert connected_components(cycle_graph(5))[0] == cycle_graph(5)
    assert [c.n for c in connected_components(empty_graph(3))] == [1, 1, 1]


# -- spanning subgraphs -------------------------------------------------------


def test_spanning_subgraph_counts():
    subs = list(spanning_subgraphs(complete_graph(3)))
    assert len(subs) == 8
    sizes = sorted(len(s) for s, _ in subs)
    assert sizes == [0, 1, 1, 1, 2, 2, 2, 3]
    assert len({frozenset(s) for s, _ in subs}) == 8
    assert all(g.n == 3 for _, g in subs)


def test_spanning_subgraph_small():
    assert [s for s, _ in spanning_subgraphs(empty_graph(1))] == [()]
    assert len(list(spanning_subgraphs(path_graph(3)))) == 4


def test_spanning_subgraph_cap():
    big = SimpleGraph.from_edges(
        9, [(i, j) for i in range(9) for j in range(i + 1, 9)][:31]
    )
    with pytest.raises(GraphError):
        next(spanning_subgraphs(big))


# -- embeddings ---------------------------------------------------------------


def test_embedding_examples():
    from hchroma.galois import find_irreducible, paley_graph

    p5 = paley_graph(find_irreducible(5, 1))
    found = find_embedding(cycle_graph(5), p5, mode="induced")
    assert isinstance(found, Embedding) and found.verify(p5)

    c4 = ExplicitHost(cycle_graph(4))
    assert isinstance(find_embedding(complete_graph(3), c4, mode="subgraph"), NotFound)

    k3 = ExplicitHost(complete_graph(3))
    assert isinstance(find_embedding(path_graph(3), k3, mode="induced"), NotFound)
    sub = find_embedding(path_graph(3), k3, mode="subgraph")
    assert isinstance(sub, Embedding) and sub.verify(k3)


def test_embedding_budget_zero():
    host = ExplicitHost(complete_graph(3))
    assert isinstance(
        find_embedding(path_graph(2), host, mode="subgraph", budget=0), BudgetExceeded
    )


def test_induced_images_are_isomorphic():
    host = ExplicitHost(complete_graph(4).disjoint_union(cycle_graph(5)))
    for pattern in [path_graph(3), cycle_graph(4), complete_graph(3)]:
        res = find_embedding(pattern, host, mode="induced")
        if isinstance(res, Embedding):
            image = host.graph.subgraph(list(res.mapping))
            assert is_isomorphic_bruteforce(image, pattern)


def test_embedding_modes_validated():
    with pytest.raises(GraphError):
        find_embedding(path_graph(2), ExplicitHost(complete_graph(3)), mode="weird")

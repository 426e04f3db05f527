import random

import pytest

from hchroma.graphs import GraphError, complete_graph, empty_graph, path_graph, spanning_subgraphs
from hchroma.hypermulti import (
    UniformityError,
    admissible_classes,
    admissible_witness_count,
    aut_order,
    canonicalize,
    class_by_code,
    connected_components,
    enumerate_classes,
    is_admissible,
    unit_class,
)


def test_canonicalize_relabeling():
    a = canonicalize([(7, 9), (9, 3)])
    b = canonicalize([(0, 1), (1, 2)])
    assert a.code == b.code and a is b


def test_canonicalize_random_relabelings():
    rng = random.Random(99)
    samples = [
        [(0, 1), (1, 2), (1, 2)],
        [(0, 1), (2, 3)],
        [(0, 1, 2), (2, 3, 4)],
        [(0,), (0,), (1,)],
    ]
    for edges in samples:
        base = canonicalize(edges)
        points = sorted({p for e in edges for p in e})
        for _ in range(100):
            perm = list(range(20))
            rng.shuffle(perm)
            relabeled = [tuple(perm[p] for p in e) for e in edges]
            assert canonicalize(relabeled).code == base.code


def test_canonicalize_idempotent():
    lam = canonicalize([(4, 2), (2, 0), (0, 4)])
    again = canonicalize(lam.edges)
    assert again is lam


def test_doubled_edge_aut():
    d = canonicalize([(1, 2), (1, 2)])
    assert d.aut_order == 2
    assert d.num_vertices == 2 and d.num_edges == 2


def test_k1_partition_identification():
    p = canonicalize([(1,), (1,), (2,)])
    assert p.multiplicity_partition() == (2, 1)
    assert p.code == canonicalize([(8,), (8,), (0,)]).code


def test_uniformity_error():
    with pytest.raises(UniformityError):
        canonicalize([(0, 1), (2,)])
    with pytest.raises(UniformityError):
        canonicalize([(0, 0)])


def test_components():
    assert len(connected_components(canonicalize([(0, 1), (2, 3)]))) == 2
    assert canonicalize([(0, 1), (1, 2)]).is_connected()
    comps = connected_components(canonicalize([(0,), (0,), (1,)]))
    assert sorted(c.multiplicity_partition() for c in comps) == [(1,), (2,)]


def test_aut_order_examples():
    assert aut_order(canonicalize([(0, 1), (1, 2), (0, 2)])) == 6
    assert aut_order(canonicalize([(0, 1), (1, 2), (2, 3)])) == 2
    assert aut_order(canonicalize([(0, 1)] * 3)) == 2
    assert aut_order(canonicalize([(0, 1), (2, 3)])) == 8
    assert aut_order(unit_class(2)) == 1


def test_enumerate_counts_k2():
    totals = [1, 3, 8, 23, 66]
    connected = [1, 2, 5, 12, 33]
    for n in range(1, 6):
        assert len(enumerate_classes(n, 2)) == totals[n - 1]
        assert len(enumerate_classes(n, 2, connected=True)) == connected[n - 1]


@pytest.mark.slow
def test_enumerate_counts_k2_large():
    assert len(enumerate_classes(6, 2)) == 212
    assert len(enumerate_classes(7, 2)) == 686
    assert len(enumerate_classes(6, 2, connected=True)) == 103
    assert len(enumerate_classes(7, 2, connected=True)) == 333


def test_enumerate_counts_k1():
    partition_numbers = [1, 2, 3, 5, 7, 11]
    for n in range(1, 7):
        assert len(enumerate_classes(n, 1)) == partition_numbers[n - 1]
        assert len(enumerate_classes(n, 1, connected=True)) == 1


def test_enumerate_k3_small():
    # every class is found and classes are pairwise distinct codes
    out = enumerate_classes(2, 3)
    assert len(out) == len({h.code for h in out})
    assert all(h.k == 3 and h.num_edges == 2 for h in out)


def test_enumerate_infeasible():
    with pytest.raises(GraphError):
        enumerate_classes(8, 2)
    with pytest.raises(GraphError):
        enumerate_classes(5, 3)


def test_admissible_examples():
    single = admissible_classes(empty_graph(1), 2)
    assert len(single) == 1 and single[0].num_edges == 1
    pair = admissible_classes(path_graph(2), 2)
    shapes = sorted(h.edges for h in pair)
    assert shapes == [((0, 1), (0, 1)), ((0, 2), (1, 2))]
    p3 = admissible_classes(path_graph(3), 2)
    assert len(p3) == 5


def test_admissible_disconnected_error():
    with pytest.raises(GraphError, match="product"):
        admissible_classes(empty_graph(2), 2)


def test_admissible_witnesses_verified():
    for g in [path_graph(3), complete_graph(3), path_graph(4)]:
        for lam in admissible_classes(g, 2):
            assert lam.num_edges == g.n
            assert is_admissible(g, lam)


def test_admissible_witness_counts():
    p3 = path_graph(3)
    by_edges = {
        lam.edges: admissible_witness_count(p3, lam)
        for lam in admissible_classes(p3, 2)
    }
    # star and triangle admit every bijection; the 4-path only the two
    # with the middle edge in the middle; the chain three; tripled one
    counts = sorted(by_edges.values())
    assert counts == [1, 2, 3, 6, 6]


def test_admissible_survives_edge_removal():
    # fewer pattern edges mean fewer constraints, so admissibility is
    # inherited by every spanning subgraph (checked via the raw
    # bijection test, which handles disconnected patterns)
    for g in [path_graph(3), complete_graph(3), path_graph(4)]:
        classes = admissible_classes(g, 2)
        for subset, gs in spanning_subgraphs(g):
            for lam in classes:
                assert is_admissible(gs, lam)


def test_admissible_k1_any_order():
    lam = admissible_classes(path_graph(7), 1)
    assert len(lam) == 1 and lam[0].multiplicity_partition() == (7,)


def test_class_registry():
    lam = canonicalize([(0, 1), (0, 2)])
    assert class_by_code(lam.code) is lam


def test_json_shape():
    lam = canonicalize([(0, 1), (1, 2), (1, 2)])
    data = lam.to_json()
    assert data["k"] == 2 and data["vertices"] == 3
    assert data["hyperedges"] == sorted(data["hyperedges"])

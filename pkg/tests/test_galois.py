import random

import pytest

from hchroma import galois as gal
from hchroma.graphs import (
    Embedding,
    NotFound,
    canonical_form,
    complete_bipartite,
    cycle_graph,
    is_isomorphic_bruteforce,
)


def test_find_irreducible_degree_one():
    spec = gal.find_irreducible(5, 1)
    assert spec.modulus == (0, 1) and spec.q == 5
    assert gal.find_irreducible(13, 1).q == 13


def test_find_irreducible_quadratic_has_nonsquare_discriminant():
    spec = gal.find_irreducible(5, 2)
    c0, c1, c2 = spec.modulus
    assert c2 == 1
    assert (c1 * c1 - 4 * c0) % 5 in (2, 3)


def test_modulus_validation():
    with pytest.raises(gal.FieldError):
        gal.FieldSpec(5, 2, (0, 0, 1))  # x^2, reducible
    with pytest.raises(gal.FieldError):
        gal.FieldSpec(4, 1, (0, 1))  # not a prime
    with pytest.raises(gal.FieldError):
        gal.FieldSpec(2, 1, (0, 1))  # even characteristic unsupported


def test_arithmetic_gf13():
    f13 = gal.find_irreducible(13, 1)
    a, b = f13.element(6), f13.element(9)
    assert (a + b).rank == 2
    assert (a * b).rank == 2


def test_field_axioms_random():
    rng = random.Random(7)
    for p, d in [(5, 2), (3, 3), (13, 1)]:
        spec = gal.find_irreducible(p, d)
        q = spec.q
        elems = [spec.from_rank(rng.randrange(q)) for _ in range(200)]
        for i in range(0, 198, 3):
            x, y, z = elems[i], elems[i + 1], elems[i + 2]
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
        for e in elems:
            if not e.is_zero():
                assert e.inv() * e == spec.one
                assert e ** (q - 1) == spec.one


def test_inverse_of_zero_rejected():
    f5 = gal.find_irreducible(5, 1)
    with pytest.raises(ZeroDivisionError):
        f5.zero.inv()


def test_squares_gf13_gf5():
    f13 = gal.find_irreducible(13, 1)
    sq13 = sorted(
        e.rank for e in f13.elements() if not e.is_zero() and gal.is_square(e)
    )
    assert sq13 == [1, 3, 4, 9, 10, 12]
    f5 = gal.find_irreducible(5, 1)
    sq5 = sorted(e.rank for e in f5.elements() if not e.is_zero() and gal.is_square(e))
    assert sq5 == [1, 4]


def test_is_square_zero_signal():
    f5 = gal.find_irreducible(5, 1)
    with pytest.raises(gal.FieldError):
        gal.is_square(f5.zero)
    assert gal.quadratic_character(f5.zero) == 0


def test_minus_one_square_iff_q_1_mod_4():
    for p, d in [(5, 1), (13, 1), (17, 1), (5, 2), (29, 1), (7, 1), (11, 1)]:
        spec = gal.find_irreducible(p, d)
        minus_one = -spec.one
        assert gal.is_square(minus_one) == (spec.q % 4 == 1)


def test_primitive_elements():
    assert gal.primitive_element(gal.find_irreducible(5, 1)).rank == 2
    assert gal.primitive_element(gal.find_irreducible(13, 1)).rank == 2
    spec = gal.find_irreducible(3, 2)
    alpha = gal.primitive_element(spec)
    assert alpha ** (spec.q - 1) == spec.one
    for r in (2,):  # prime divisors of 8
        assert alpha ** ((spec.q - 1) // r) != spec.one


def test_paley_rejects_bad_residue_class():
    with pytest.raises(gal.FieldError):
        gal.paley_graph(gal.find_irreducible(7, 1))


def test_paley_small_graphs():
    p5 = gal.paley_graph(gal.find_irreducible(5, 1))
    assert canonical_form(p5.to_simple_graph()).code == canonical_form(
        cycle_graph(5)
    ).code
    p13 = gal.paley_graph(gal.find_irreducible(13, 1))
    assert sorted(p13.neighbor_iter(0)) == [1, 3, 4, 9, 10, 12]


@pytest.mark.parametrize("p,d", [(5, 1), (3, 2), (13, 1), (17, 1), (5, 2), (29, 1)])
def test_paley_degree_regularity(p, d):
    host = gal.paley_graph(gal.find_irreducible(p, d))
    q = host.q
    for v in range(q):
        assert host.degree(v) == (q - 1) // 2
        assert len(list(host.neighbor_iter(v))) == (q - 1) // 2


def test_subfield_embedding_prime_field():
    f5 = gal.find_irreducible(5, 1)
    f125 = gal.find_irreducible(5, 3)
    emb = gal.subfield_embedding(f5, f125)
    for c in range(5):
        assert emb(f5.element(c)) == f125.element(c)


def test_subfield_embedding_homomorphism():
    rng = random.Random(11)
    f25 = gal.find_irreducible(5, 2)
    f625 = gal.find_irreducible(5, 4)
    emb = gal.subfield_embedding(f25, f625)
    for _ in range(100):
        a = f25.from_rank(rng.randrange(25))
        b = f25.from_rank(rng.randrange(25))
        assert emb(a * b) == emb(a) * emb(b)
        assert emb(a + b) == emb(a) + emb(b)


def test_subfield_embedding_degree_guard():
    with pytest.raises(gal.FieldError):
        gal.subfield_embedding(gal.find_irreducible(5, 2), gal.find_irreducible(5, 3))


def test_induced_copy_of_smaller_paley():
    # odd-degree extension: the subfield inherits exactly the same
    # quadratic-residue adjacency
    f5 = gal.find_irreducible(5, 1)
    f125 = gal.find_irreducible(5, 3)
    emb = gal.subfield_embedding(f5, f125)
    p5 = gal.paley_graph(f5)
    p125 = gal.paley_graph(f125)
    ranks = [emb(f5.from_rank(r)).rank for r in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            assert p125.adjacent(ranks[i], ranks[j]) == p5.adjacent(i, j)


def test_even_degree_extension_squares_premise():
    # embedded base-field elements are all squares in an even extension
    f5 = gal.find_irreducible(5, 1)
    f25 = gal.find_irreducible(5, 2)
    emb = gal.subfield_embedding(f5, f25)
    for c in range(1, 5):
        assert gal.is_square(emb(f5.element(c)))


def test_bipartite_embedding_in_p625():
    f5 = gal.find_irreducible(5, 1)
    host = gal.paley_graph(gal.find_irreducible(5, 4))
    emb = gal.complete_bipartite_embedding(f5, host)
    assert isinstance(emb, Embedding)
    assert emb.verify(host)
    image = [emb.mapping[i] for i in range(8)]
    cross = sum(
        host.adjacent(u, w) for u in image[:4] for w in image[4:]
    )
    intra = sum(
        host.adjacent(image[i], image[j])
        for side in (range(4), range(4, 8))
        for i in side
        for j in side
        if i < j
    )
    assert cross == 16 and intra == 0
    assert is_isomorphic_bruteforce(emb.pattern, complete_bipartite(4, 4))


def test_bipartite_embedding_below_bound_reports():
    f5 = gal.find_irreducible(5, 1)
    host = gal.paley_graph(gal.find_irreducible(5, 2))
    out = gal.complete_bipartite_embedding(f5, host)
    assert isinstance(out, (Embedding, NotFound))


def test_even_cycle_embeddings_in_p625():
    f5 = gal.find_irreducible(5, 1)
    host = gal.paley_graph(gal.find_irreducible(5, 4))
    c8 = gal.even_cycle_embedding(f5, host)
    assert isinstance(c8, Embedding) and c8.pattern.n == 8 and c8.verify(host)
    c6 = gal.even_cycle_embedding(f5, host, ("cycle", 6))
    assert isinstance(c6, Embedding) and c6.pattern.n == 6 and c6.verify(host)
    c4 = gal.even_cycle_embedding(f5, host, ("cycle", 4))
    assert isinstance(c4, Embedding) and c4.verify(host)
    p7 = gal.even_cycle_embedding(f5, host, ("path", 7))
    assert isinstance(p7, Embedding) and p7.pattern.num_edges() == 6 and p7.verify(host)


def test_odd_cycle_below_bound_reports():
    f5 = gal.find_irreducible(5, 1)
    host = gal.paley_graph(gal.find_irreducible(5, 4))
    out = gal.odd_cycle_embedding(f5, host, 4)
    assert isinstance(out, (Embedding, NotFound))


def test_constructive_embedding_parameter_guards():
    f5 = gal.find_irreducible(5, 1)
    f125 = gal.find_irreducible(5, 3)
    with pytest.raises(gal.FieldError):
        gal.complete_bipartite_embedding(f5, f125)  # odd-degree extension
    host = gal.paley_graph(gal.find_irreducible(5, 2))
    with pytest.raises(gal.FieldError):
        gal.even_cycle_embedding(f5, host, ("cycle", 7))
    with pytest.raises(gal.FieldError):
        gal.odd_cycle_embedding(f5, host, 1)


def test_bound_calculators():
    assert gal.induced_level_bound(5, 5) == 1
    assert gal.bipartite_host_order_bound(5) == 225
    assert gal.odd_cycle_host_order_bound(5) == 335241
    assert gal.subgraph_level_bound(5, 5) == 0
    assert gal.induced_level_bound(5, 2) == 0
    with pytest.raises(gal.FieldError):
        gal.induced_level_bound(5, 1)
    with pytest.raises(gal.FieldError):
        gal.subgraph_level_bound(5, 0)


def test_field_json():
    spec = gal.find_irreducible(5, 2)
    data = spec.to_json()
    assert data["p"] == 5 and data["d"] == 2 and len(data["modulus"]) == 3

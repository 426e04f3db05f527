"""The ring Sym^(k): monomial and power-sum bases over hyper-multigraph classes.

Coefficients are exact Python integers throughout; equality of sparse
term maps is the correctness criterion, so no floats appear anywhere in
this module. Monomial keys are class codes, power-sum keys are sorted
multisets of connected-class codes (a power sum is the product of the
monomial functions of its connected components).

Three independent routes produce the expansion of the Kneser chromatic
function and must agree exactly: the alternating sum over spanning
subgraphs (power-sum basis), direct per-class map counting (monomial
basis), and brute-force enumeration over a finite slice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from . import kernels
from .graphs import (
    GraphError,
    SimpleGraph,
    canonical_form,
    canonical_relabel,
    connected_components,
    spanning_subgraphs,
    _search_order,
)
from .hosts import KneserHost
from .hypermulti import (
    _candidate_edges,
    admissible_classes,
    admissible_witness_count,
    canonicalize,
    class_by_code,
    unit_class,
)


@dataclass(frozen=True)
class SymFunc:
    k: int
    basis: str
    terms: tuple  # sorted tuple of (key, coeff); dict view via .term_map

    @property
    def term_map(self):
        return dict(self.terms)

    def __repr__(self):
        return f"SymFunc(k={self.k}, basis={self.basis!r}, {len(self.terms)} terms)"


def m_basis(k, terms):
    cleaned = {key: c for key, c in terms.items() if c}
    return SymFunc(k, "m", tuple(sorted(cleaned.items())))


def p_basis(k, terms):
    cleaned = {}
    for key, c in terms.items():
        if not c:
            continue
        for code in key:
            if not class_by_code(code).is_connected():
                raise GraphError("power-sum keys must be multisets of connected classes")
        cleaned[tuple(sorted(key))] = cleaned.get(tuple(sorted(key)), 0) + c
    cleaned = {key: c for key, c in cleaned.items() if c}
    return SymFunc(k, "p", tuple(sorted(cleaned.items())))


def unit_m(k):
    return m_basis(k, {unit_class(k).code: 1})


def unit_p(k):
    return p_basis(k, {(): 1})


def single_m(lam):
    return m_basis(lam.k, {lam.code: 1})


# -- products ------------------------------------------------------------

_PAIR_CACHE = {}
_SUBSET_CLASS_CACHE = {}


def _class_of_edges(edges, k):
    key = (k, edges)
    code = _SUBSET_CLASS_CACHE.get(key)
    if code is None:
        code = canonicalize(edges, k).code
        _SUBSET_CLASS_CACHE[key] = code
    return code


def _glue_candidates(la, lb):
    """Classes formed by overlaying lb's representative onto la's.

    Enumerates injections of lb's vertices into la's vertices plus fresh
    ones (fresh used in increasing order); every class in the product's
    support arises this way.
    """
    k = la.k
    m1, m2 = la.num_vertices, lb.num_vertices
    base = list(la.edges)
    out = set()
    mapping = [None] * m2

    def rec(i, used_mask, fresh):
        if i == m2:
            glued = base + [
                tuple(sorted(mapping[p] for p in e)) for e in lb.edges
            ]
            out.add(_class_of_edges(tuple(sorted(glued)), k))
            return
        for t in range(m1):
            if not used_mask >> t & 1:
                mapping[i] = t
                rec(i + 1, used_mask | 1 << t, fresh)
        mapping[i] = m1 + fresh
        rec(i + 1, used_mask, fresh + 1)
        mapping[i] = None

    rec(0, 0, 0)
    return out


def _split_count(nu, la, lb):
    """Ordered splits of nu's hyperedge multiset into copies of la and lb."""
    edges = list(nu.edges)
    n1 = la.num_edges
    seen = set()
    count = 0
    for positions in combinations(range(len(edges)), n1):
        part1 = tuple(edges[i] for i in positions)
        if part1 in seen:
            continue
        seen.add(part1)
        if _class_of_edges(part1, nu.k) != la.code:
            continue
        taken = set(positions)
        part2 = tuple(edges[i] for i in range(len(edges)) if i not in taken)
        if _class_of_edges(part2, nu.k) == lb.code:
            count += 1
    return count


def _pair_product(code_a, code_b):
    key = (code_a, code_b) if code_a <= code_b else (code_b, code_a)
    cached = _PAIR_CACHE.get(key)
    if cached is not None:
        return cached
    la, lb = class_by_code(key[0]), class_by_code(key[1])
    if la.num_edges == 0:
        result = {lb.code: 1}
    elif lb.num_edges == 0:
        result = {la.code: 1}
    else:
        result = {}
        for nu_code in _glue_candidates(la, lb):
            c = _split_count(class_by_code(nu_code), la, lb)
            if c:
                result[nu_code] = c
    _PAIR_CACHE[key] = result
    return result


def m_mul(a, b):
    """Product in the monomial basis via representative-splitting counts."""
    if a.k != b.k:
        raise GraphError("mismatched uniformity")
    if a.basis != "m" or b.basis != "m":
        raise GraphError("m_mul expects monomial-basis inputs")
    out = {}
    for la, ca in a.terms:
        for lb, cb in b.terms:
            for nu, c in _pair_product(la, lb).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return m_basis(a.k, out)


_PKEY_CACHE = {}


def _p_key_expansion(k, key):
    cache_key = (k, key)
    cached = _PKEY_CACHE.get(cache_key)
    if cached is not None:
        return cached
    if not key:
        result = {unit_class(k).code: 1}
    else:
        sub = _p_key_expansion(k, key[:-1])
        last = key[-1]
        result = {}
        for code, c in sub.items():
            for nu, cnu in _pair_product(code, last).items():
                result[nu] = result.get(nu, 0) + c * cnu
    _PKEY_CACHE[cache_key] = result
    return result


def p_to_m(f):
    """Expand power sums into the monomial basis (triangular, positive lead)."""
    if f.basis == "m":
        return f
    out = {}
    for key, coeff in f.terms:
        for code, c in _p_key_expansion(f.k, key).items():
            out[code] = out.get(code, 0) + coeff * c
    return m_basis(f.k, out)


# -- the three expansion routes -----------------------------------------

_ADMISSIBLE_CACHE = {}


def _admissible_weighted(component, k):
    """(class code, witness count) pairs for a connected component, memoized."""
    code = canonical_form(component).code
    cache_key = (code, k)
    cached = _ADMISSIBLE_CACHE.get(cache_key)
    if cached is None:
        rep = canonical_relabel(component)
        cached = tuple(
            (h.code, admissible_witness_count(rep, h))
            for h in admissible_classes(rep, k)
        )
        _ADMISSIBLE_CACHE[cache_key] = cached
    return cached


def power_sum_expansion(g, k):
    """Alternating sum over spanning subgraphs, in the power-sum basis.

    Each edge subset contributes sign (-1)^|S| per choice of admissible
    class for every connected component of the subgraph, weighted by the
    number of witnessing bijections of each class. The weights make the
    expansion agree exactly with direct map counting; dropping them (one
    term per class, as sometimes displayed) breaks the equality whenever
    a class admits more than one witness.
    """
    if k < 1 or k > 3:
        raise GraphError("uniformity must be 1, 2 or 3")
    if k == 1:
        if g.n > 16 or g.num_edges() > 16:
            raise GraphError("k=1 expansion capped at 16 vertices and edges")
    elif g.n > 6 or g.num_edges() > 10:
        raise GraphError("power-sum expansion capped at 6 vertices, 10 edges")
    terms = {}
    for subset, gs in spanning_subgraphs(g):
        sign = -1 if len(subset) % 2 else 1
        lists = [_admissible_weighted(comp, k) for comp in connected_components(gs)]
        for combo in product(*lists):
            key = tuple(sorted(code for code, _ in combo))
            weight = 1
            for _, w in combo:
                weight *= w
            terms[key] = terms.get(key, 0) + sign * weight
    return p_basis(k, terms)


def monomial_expansion(g, k):
    """Direct monomial-basis expansion by counting maps onto each class.

    Candidate classes come from proper assignments of k-subsets (fresh
    points in increasing order); each coefficient counts the maps onto a
    fixed representative hitting every hyperedge with its multiplicity,
    adjacent vertices receiving disjoint hyperedges.
    """
    if g.n > 6 or k > 3 or k < 1:
        raise GraphError("direct expansion capped at 6 vertices, k <= 3")
    if g.n == 0:
        return unit_m(k)
    order = _search_order(g)
    earlier = []
    for i, v in enumerate(order):
        earlier.append([j for j in range(i) if g.has_edge(v, order[j])])
    candidates = set()
    assigned = [None] * g.n

    def rec(i, used):
        if i == g.n:
            candidates.add(_class_of_edges(tuple(sorted(assigned)), k))
            return
        for e in _candidate_edges(used, k, k * g.n):
            es = set(e)
            if all(not es & set(assigned[j]) for j in earlier[i]):
                assigned[i] = e
                rec(i + 1, max(used, e[-1] + 1))
                assigned[i] = None

    rec(0, 0)
    terms = {}
    for code in candidates:
        count = _count_onto(g, class_by_code(code))
        if count:
            terms[code] = count
    return m_basis(k, terms)


def _count_onto(g, lam):
    """Maps from V(g) onto lam's representative hitting multiplicities."""
    distinct = []
    remaining = []
    for e in lam.edges:
        if distinct and distinct[-1] == e:
            remaining[-1] += 1
        else:
            distinct.append(e)
            remaining.append(1)
    sets = [set(e) for e in distinct]
    assigned = [None] * g.n
    nbrs = [g.neighbors(v) for v in range(g.n)]
    total = 0

    def rec(v):
        nonlocal total
        if v == g.n:
            total += 1
            return
        for idx in range(len(distinct)):
            if not remaining[idx]:
                continue
            if any(
                assigned[u] is not None and sets[idx] & sets[assigned[u]]
                for u in nbrs[v]
            ):
                continue
            assigned[v] = idx
            remaining[idx] -= 1
            rec(v + 1)
            remaining[idx] += 1
            assigned[v] = None

    rec(0)
    return total


def slice_expansion(g, k, n, force_pure=False):
    """Brute-force expansion over the k-subsets of an n-point ground set.

    Enumerates every proper map into the finite slice and groups image
    multisets into classes; exact (equal to the infinite expansion) once
    n >= k |V(g)|. The enumeration itself runs in the compiled kernel
    when available.
    """
    if g.n > 5 or n > 10 or k > 2 or k < 1:
        raise GraphError("slice expansion capped at 5 vertices, n <= 10, k <= 2")
    if n < k:
        raise GraphError("ground set smaller than k")
    if g.n == 0:
        return unit_m(k)
    host = KneserHost(n, k)
    order = _search_order(g)
    masks = []
    for i, v in enumerate(order):
        m = 0
        for j in range(i):
            if g.has_edge(v, order[j]):
                m |= 1 << j
        masks.append(m)
    disj = host.disjointness_masks()
    counts = kernels.kneser_image_counts(masks, host.order, disj, force_pure=force_pure)
    subsets = host.subsets
    totals = {}
    norm_memo = {}
    for image, cnt in counts.items():
        key = _normalize_image(image, subsets)
        code = norm_memo.get(key)
        if code is None:
            code = canonicalize(key, k).code
            norm_memo[key] = code
        totals[code] = totals.get(code, 0) + cnt
    terms = {}
    for code, total in totals.items():
        lam = class_by_code(code)
        orbit = _orbit_count(lam, n)
        coeff, rem = divmod(total, orbit)
        assert rem == 0, "image multiset total not divisible by its orbit size"
        terms[code] = coeff
    return m_basis(k, terms)


def _normalize_image(image, subsets):
    relabel = {}
    out = []
    for idx in image:
        e = []
        for p in subsets[idx]:
            if p not in relabel:
                relabel[p] = len(relabel)
            e.append(relabel[p])
        out.append(tuple(sorted(e)))
    return tuple(sorted(out))


# -- evaluation and comparison -------------------------------------------


def _orbit_count(lam, n):
    """Number of multisets in lam's class within an n-point ground set."""
    m = lam.num_vertices
    if m > n:
        return 0
    ff = math.perm(n, m)
    count, rem = divmod(ff, lam.aut_order)
    assert rem == 0
    return count


def specialize_ones(f, n):
    """Evaluate at n variables set to one: the homomorphism count into K_n."""
    if f.basis == "p":
        f = p_to_m(f)
    total = 0
    for code, coeff in f.terms:
        total += coeff * _orbit_count(class_by_code(code), n)
    return total


def equals(f, g):
    if f.k != g.k:
        raise GraphError("mismatched uniformity")
    return p_to_m(f).terms == p_to_m(g).terms


# -- serialization --------------------------------------------------------


def to_json(f):
    out_terms = []
    for key, coeff in f.terms:
        if f.basis == "m":
            classes = [class_by_code(key).to_json()]
        else:
            classes = [class_by_code(code).to_json() for code in key]
        out_terms.append({"classes": classes, "coeff": str(coeff)})
    return {"k": f.k, "basis": f.basis, "terms": out_terms}


def to_latex(f):
    """Render terms as basis symbols subscripted by hyperedge lists."""
    symbol = f.basis
    chunks = []
    for key, coeff in f.terms:
        codes = [key] if f.basis == "m" else list(key)
        body = "".join(
            symbol + "_{" + _edges_latex(class_by_code(code)) + "}" for code in codes
        ) or "1"
        if coeff == 1:
            piece = body
        elif coeff == -1:
            piece = "-" + body
        else:
            piece = f"{coeff}{body}"
        chunks.append(piece)
    if not chunks:
        return "0"
    text = chunks[0]
    for piece in chunks[1:]:
        text += " + " + piece if not piece.startswith("-") else " - " + piece[1:]
    return text


def _edges_latex(lam):
    if not lam.edges:
        return r"\varnothing"
    sep = "" if lam.num_vertices <= 10 else "."
    return r"\{" + ",".join(sep.join(str(p) for p in e) for e in lam.edges) + r"\}"

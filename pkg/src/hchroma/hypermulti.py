"""k-uniform hyper-multigraphs: canonical forms, classes, admissible sets.

A class is a multiset of k-subsets of an arbitrary label universe with
no isolated vertex, considered up to relabeling. Canonicalization works
on the vertex/hyperedge incidence graph (hyperedge nodes colored by
multiplicity), one connected component at a time, so unions of repeated
pieces never blow up the search.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations

from . import _canon
from .graphs import GraphError

FEASIBLE_CAPS = {1: 20, 2: 7, 3: 4}


class UniformityError(ValueError):
    pass


_BY_CODE = {}


class HyperMultigraph:
    """Canonical representative of a class; construct via canonicalize()."""

    __slots__ = ("k", "num_vertices", "edges", "code", "aut_order")

    def __init__(self, k, num_vertices, edges, code, aut_order):
        self.k = k
        self.num_vertices = num_vertices
        self.edges = edges
        self.code = code
        self.aut_order = aut_order

    @property
    def num_edges(self):
        return len(self.edges)

    def is_connected(self):
        if not self.edges:
            return False
        return len(_split_components(self.edges)) == 1

    def components(self):
        return [canonicalize(part, self.k) for part in _split_components(self.edges)]

    def multiplicity_partition(self):
        """Hyperedge multiplicities, largest first (the k=1 partition view)."""
        mults = {}
        for e in self.edges:
            mults[e] = mults.get(e, 0) + 1
        return tuple(sorted(mults.values(), reverse=True))

    def to_json(self):
        return {
            "k": self.k,
            "vertices": self.num_vertices,
            "hyperedges": [list(e) for e in self.edges],
        }

    def __eq__(self, other):
        return isinstance(other, HyperMultigraph) and self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return f"HyperMultigraph(k={self.k}, edges={list(self.edges)})"


def class_by_code(code):
    return _BY_CODE[code]


def canonicalize(hyperedges, k=None):
    """Canonical class of a raw multiset of k-subsets.

    Accepts arbitrary hashable labels; isomorphic inputs produce the
    identical code, and aut_order counts the vertex permutations fixing
    the hyperedge multiset.
    """
    edges = [tuple(sorted(e)) for e in hyperedges]
    if k is None:
        if not edges:
            raise UniformityError("uniformity k is required for the empty multiset")
        k = len(edges[0])
    for e in edges:
        if len(e) != k or len(set(e)) != k:
            raise UniformityError(f"hyperedge {e} is not a {k}-subset")
    pieces = [_canon_component(part, k) for part in _split_components(edges)]
    pieces.sort(key=lambda p: p[0])
    aut = 1
    i = 0
    while i < len(pieces):
        j = i
        while j < len(pieces) and pieces[j][0] == pieces[i][0]:
            j += 1
        count = j - i
        aut *= math.factorial(count) * pieces[i][1] ** count
        i = j
    out_edges = []
    offset = 0
    for _, _, m, comp_edges in pieces:
        out_edges.extend(tuple(p + offset for p in e) for e in comp_edges)
        offset += m
    out_edges.sort()
    code = (
        b"H"
        + bytes([k])
        + len(pieces).to_bytes(2, "big")
        + b"".join(len(p[0]).to_bytes(2, "big") + p[0] for p in pieces)
    )
    if code not in _BY_CODE:
        _BY_CODE[code] = HyperMultigraph(k, offset, tuple(out_edges), code, aut)
    return _BY_CODE[code]


def _split_components(edges):
    """Group hyperedges by connectivity through shared vertices."""
    if not edges:
        return []
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edges:
        for p in e:
            parent.setdefault(p, p)
        r = find(e[0])
        for p in e[1:]:
            parent[find(p)] = r
    groups = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return [groups[r] for r in sorted(groups)]


def _canon_component(edges, k):
    points = sorted({p for e in edges for p in e})
    index = {p: i for i, p in enumerate(points)}
    m = len(points)
    distinct = {}
    for e in edges:
        key = tuple(sorted(index[p] for p in e))
        distinct[key] = distinct.get(key, 0) + 1
    enodes = sorted(distinct)
    total = m + len(enodes)
    adj = [0] * total
    colors = [0] * m + [distinct[e] for e in enodes]
    for idx, e in enumerate(enodes):
        node = m + idx
        for p in e:
            adj[node] |= 1 << p
            adj[p] |= 1 << node
    order, aut = _canon.canonical_colored(total, adj, colors)
    new_pos = {}
    nxt = 0
    for v in order:
        if v < m:
            new_pos[v] = nxt
            nxt += 1
    out = []
    for e, mult in distinct.items():
        t = tuple(sorted(new_pos[p] for p in e))
        out.extend([t] * mult)
    out.sort()
    code = bytes([k, m]) + len(out).to_bytes(2, "big") + b"".join(bytes(e) for e in out)
    return code, aut, m, tuple(out)


def connected_components(lam):
    """Components of a class, linked through shared vertices."""
    return lam.components()


def aut_order(lam):
    return lam.aut_order


def unit_class(k):
    """The empty hyperedge multiset (the multiplicative unit's key)."""
    return canonicalize([], k)


def _candidate_edges(used, k, universe_cap, floor=None):
    """k-subsets of seen points plus a forced block of fresh points.

    Fresh points are consumed in increasing order, so every class shows
    up with at least one generated labeling.
    """
    out = []
    for j in range(k + 1):
        fresh = k - j
        if used + fresh > universe_cap:
            continue
        block = tuple(range(used, used + fresh))
        for old in combinations(range(used), j):
            e = old + block
            if floor is not None and e < floor:
                continue
            out.append(e)
    return out


def enumerate_classes(n, k, connected=False):
    """All classes with exactly n hyperedges, one representative each."""
    cap = FEASIBLE_CAPS.get(k)
    if cap is None or n < 1 or n > cap:
        raise GraphError(
            f"class enumeration infeasible for n={n}, k={k}; caps: {FEASIBLE_CAPS}"
        )
    if k == 1:
        out = []
        for part in _partitions(n):
            if connected and len(part) > 1:
                continue
            edges = []
            for i, mult in enumerate(part):
                edges.extend([(i,)] * mult)
            out.append(canonicalize(edges, 1))
        return sorted(out, key=lambda h: h.code)

    found = {}

    def rec(seq, used, last):
        if len(seq) == n:
            h = canonicalize(seq, k)
            if h.code not in found and (not connected or h.is_connected()):
                found[h.code] = h
            return
        for e in _candidate_edges(used, k, k * n, floor=last):
            seq.append(e)
            rec(seq, max(used, e[-1] + 1), e)
            seq.pop()

    rec([], 0, None)
    return [found[c] for c in sorted(found)]


def _partitions(n, maximum=None):
    if n == 0:
        yield ()
        return
    if maximum is None:
        maximum = n
    for first in range(min(n, maximum), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def admissible_classes(g, k):
    """Classes whose hyperedges biject with V(g), adjacency forcing intersection.

    Defined for connected patterns; a disconnected pattern's admissible
    set is the product of its components' sets, so build those per
    component instead.
    """
    if not g.is_connected():
        raise GraphError(
            "admissible classes of a disconnected graph are the product over "
            "its connected components; compute per component"
        )
    if g.n == 0:
        return []
    if k == 1:
        # 1-subsets intersect only when equal, and equality propagates
        # along edges, so a connected pattern admits the single class
        # with every vertex on one point
        return [canonicalize([(0,)] * g.n, 1)]
    if g.n > 6 or k > 3 or k < 1:
        raise GraphError("admissible-set search capped at 6 vertices, k <= 3")
    order = _bfs_order(g)
    earlier = []
    for i, v in enumerate(order):
        earlier.append([j for j in range(i) if g.has_edge(v, order[j])])
    found = {}
    assigned = [None] * g.n

    def rec(i, used):
        if i == g.n:
            h = canonicalize(assigned, k)
            found.setdefault(h.code, h)
            return
        for e in _candidate_edges(used, k, k * g.n):
            es = set(e)
            if all(es & set(assigned[j]) for j in earlier[i]):
                assigned[i] = e
                rec(i + 1, max(used, e[-1] + 1) if len(e) else used)
                assigned[i] = None

    rec(0, 0)
    return [found[c] for c in sorted(found)]


def is_admissible(g, lam):
    """Exhaustive bijection check of the admissibility condition.

    Independent of the search in admissible_classes; works for any
    pattern, connected or not.
    """
    return admissible_witness_count(g, lam) > 0


def admissible_witness_count(g, lam):
    """Number of multiset bijections V(g) -> E_lam forcing intersections.

    Counts the distinct assignments of hyperedges to vertices that hit
    every hyperedge with its multiplicity and give adjacent vertices
    intersecting images; this is the weak-homomorphism count onto a
    fixed representative, the weight each class carries in the
    alternating power-sum expansion.
    """
    if lam.num_edges != g.n:
        return 0
    edges = list(lam.edges)
    if len(set(edges)) == 1:
        return 1  # one distinct arrangement, self-intersection is trivial
    seen = set()
    count = 0
    for perm in permutations(range(g.n)):
        image = tuple(edges[perm[v]] for v in range(g.n))
        if image in seen:
            continue
        seen.add(image)
        if all(set(image[u]) & set(image[v]) for u, v in g.edges()):
            count += 1
    return count


def _bfs_order(g):
    order = [0] if g.n else []
    seen = {0} if g.n else set()
    i = 0
    while i < len(order):
        for u in sorted(g.neighbors(order[i])):
            if u not in seen:
                seen.add(u)
                order.append(u)
        i += 1
    return order

"""Host graphs behind a uniform adjacency-oracle interface.

A host exposes ``order``, ``vertices()``, ``adjacent(u, v)``,
``degree(v)`` and a display label per vertex; hosts never need to fit
in pattern-sized bitmasks. Explicit hosts wrap a SimpleGraph; Complete
and Kneser slices are implicit; Paley hosts live in
:mod:`hchroma.galois` and satisfy the same protocol.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import GraphError, SimpleGraph

MATERIALIZE_CAP = 1 << 16


class HostGraph:
    kind = "abstract"

    @property
    def order(self):
        raise NotImplementedError

    def vertices(self):
        return range(self.order)

    def adjacent(self, u, v):
        raise NotImplementedError

    def degree(self, v):
        return sum(1 for _ in self.neighbor_iter(v))

    def neighbor_iter(self, v):
        for u in self.vertices():
            if u != v and self.adjacent(u, v):
                yield u

    def vertex_label(self, v):
        return v

    def neighbor_masks(self):
        """Adjacency bitmask rows, only for hosts of order <= 64."""
        if self.order > 64:
            return None
        rows = []
        for v in self.vertices():
            m = 0
            for u in self.neighbor_iter(v):
                m |= 1 << u
            rows.append(m)
        return rows

    def to_simple_graph(self):
        if self.order > MATERIALIZE_CAP:
            raise GraphError(
                f"host of order {self.order} exceeds the materialization cap"
            )
        edges = [
            (u, v)
            for u in self.vertices()
            for v in self.neighbor_iter(u)
            if u < v
        ]
        return SimpleGraph.from_edges(self.order, edges)

    def complement(self):
        return ExplicitHost(self.to_simple_graph().complement())


class ExplicitHost(HostGraph):
    kind = "explicit"

    def __init__(self, graph):
        self.graph = graph

    @property
    def order(self):
        return self.graph.n

    def adjacent(self, u, v):
        return self.graph.has_edge(u, v)

    def degree(self, v):
        return self.graph.degree(v)

    def neighbor_iter(self, v):
        return iter(self.graph.neighbors(v))

    def neighbor_masks(self):
        return list(self.graph.adj) if self.graph.n <= 64 else None

    def to_simple_graph(self):
        return self.graph

    def __repr__(self):
        return f"ExplicitHost(n={self.graph.n})"


class CompleteHost(HostGraph):
    kind = "complete"

    def __init__(self, n):
        if n < 0:
            raise GraphError("negative host order")
        self.n = n

    @property
    def order(self):
        return self.n

    def adjacent(self, u, v):
        return u != v

    def degree(self, v):
        return self.n - 1

    def neighbor_iter(self, v):
        return (u for u in range(self.n) if u != v)

    def __repr__(self):
        return f"CompleteHost({self.n})"


class KneserHost(HostGraph):
    """Finite Kneser slice: k-subsets of an n-point ground set, disjointness adjacency."""

    kind = "kneser"

    def __init__(self, n, k):
        if k < 1 or n < k:
            raise GraphError(f"invalid Kneser slice parameters n={n}, k={k}")
        self.n = n
        self.k = k
        self.subsets = list(combinations(range(n), k))
        self._index = {s: i for i, s in enumerate(self.subsets)}
        self._deg = _binom(n - k, k)

    @property
    def order(self):
        return len(self.subsets)

    def adjacent(self, u, v):
        return not set(self.subsets[u]) & set(self.subsets[v])

    def degree(self, v):
        return self._deg

    def vertex_label(self, v):
        return list(self.subsets[v])

    def index_of(self, subset):
        return self._index[tuple(sorted(subset))]

    def disjointness_masks(self):
        """Bitmask rows of pairwise-disjoint slice vertices (order <= 64)."""
        if self.order > 64:
            return None
        rows = []
        for s in self.subsets:
            m = 0
            ss = set(s)
            for j, t in enumerate(self.subsets):
                if not ss & set(t):
                    m |= 1 << j
            rows.append(m)
        return rows

    def __repr__(self):
        return f"KneserHost(n={self.n}, k={self.k})"


def _binom(a, b):
    import math

    return math.comb(a, b) if a >= b >= 0 else 0


def host_from_spec(spec):
    """Parse a hostspec string: complete:N, kneser:N:K, paley:P:D, file:PATH."""
    parts = spec.split(":", 1)
    kind = parts[0]
    rest = parts[1] if len(parts) > 1 else ""
    if kind == "complete":
        return CompleteHost(int(rest))
    if kind == "kneser":
        n, k = rest.split(":")
        return KneserHost(int(n), int(k))
    if kind == "paley":
        from . import galois

        fields = rest.split(":")
        p = int(fields[0])
        d = int(fields[1]) if len(fields) > 1 else 1
        return galois.paley_graph(galois.find_irreducible(p, d))
    if kind == "file":
        from .graphs import parse_graph6

        with open(rest, "r", encoding="ascii") as fh:
            line = fh.readline()
        return ExplicitHost(parse_graph6(line))
    raise GraphError(f"unknown hostspec {spec!r}")

"""Simple graphs: representation, graph6 I/O, canonical forms, embeddings.

Vertices are 0..n-1 and adjacency is stored as per-vertex bitmasks, so
patterns are capped at 64 vertices (hosts are unbounded and live behind
the adjacency-oracle interface in :mod:`hchroma.hosts`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import _canon

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input; carries the offending byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SimpleGraph:
    """Finite simple graph on vertices 0..n-1.

    Immutable once constructed; adjacency is symmetric and loop-free.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n, adj, labels=None):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError("adjacency row count does not match n")
        for v, row in enumerate(adj):
            if row >> n:
                raise GraphError(f"vertex {v} has a neighbor >= n")
            if row & (1 << v):
                raise GraphError(f"loop at vertex {v}")
        for v in range(n):
            for u in _bits(adj[v]):
                if not adj[u] & (1 << v):
                    raise GraphError(f"asymmetric adjacency at ({v}, {u})")
        self.n = n
        self.adj = adj
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def num_edges(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v):
        return self.adj[v].bit_count()

    def neighbors(self, v):
        return list(_bits(self.adj[v]))

    def has_edge(self, u, v):
        return bool(self.adj[u] & (1 << v))

    def relabel(self, order):
        """Graph with input vertex ``order[i]`` renamed to ``i``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = [0] * self.n
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                adj[pos[v]] |= 1 << pos[u]
        return SimpleGraph(self.n, adj)

    def add_vertex(self, neighbor_mask):
        adj = list(self.adj) + [neighbor_mask]
        for u in _bits(neighbor_mask):
            adj[u] |= 1 << self.n
        return SimpleGraph(self.n + 1, adj)

    def subgraph(self, vertices):
        """Induced subgraph on ``vertices`` (in the given order)."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for v in vertices:
            for u in _bits(self.adj[v]):
                if u in pos:
                    adj[pos[v]] |= 1 << pos[u]
        return SimpleGraph(len(vertices), adj)

    def complement(self):
        full = (1 << self.n) - 1
        return SimpleGraph(
            self.n, [full & ~self.adj[v] & ~(1 << v) for v in range(self.n)]
        )

    def disjoint_union(self, other):
        adj = list(self.adj) + [row << self.n for row in other.adj]
        return SimpleGraph(self.n + other.n, adj)

    def is_connected(self):
        if self.n == 0:
            return True
        return len(_component_masks(self.n, self.adj)) == 1

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data):
        return cls.from_edges(int(data["n"]), data["edges"])

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def empty_graph(n):
    return SimpleGraph(n, [0] * n)


def complete_graph(n):
    full = (1 << n) - 1
    return SimpleGraph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a, b):
    return SimpleGraph.from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


# -- graph6 ------------------------------------------------------------


def parse_graph6(text):
    """Decode one graph6 line (n <= 64)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    base = 0
    if text.startswith(">>graph6<<"):
        text = text[10:]
        base = 10
    if not text:
        raise Graph6Error("empty graph6 string", base)
    data = [ord(ch) for ch in text]
    for i, b in enumerate(data):
        if b < 63 or b > 126:
            raise Graph6Error(f"character {text[i]!r} outside graph6 range", base + i)
    if data[0] == 126:  # long form: '~' then 3 sextets
        if len(data) < 4:
            raise Graph6Error("truncated long-form vertex count", base)
        if data[1] == 126:
            raise Graph6Error("very-long form exceeds the 64-vertex cap", base + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_base = base + 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_base = base + 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES} cap", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"need {need} adjacency characters, got {len(body)}", base)
    if len(body) > need:
        raise Graph6Error("trailing characters after adjacency bits", body_base + need)
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    for extra in bits[nbits:]:
        if extra:
            raise Graph6Error("nonzero padding bits", body_base + need - 1)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return SimpleGraph(n, adj)


def to_graph6(g):
    """Encode a graph as a graph6 line."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


# -- canonical forms ---------------------------------------------------


@dataclass(frozen=True)
class CanonicalCode:
    code: bytes
    aut_order: int


def _component_masks(n, adj):
    seen = 0
    masks = []
    for v in range(n):
        if seen & (1 << v):
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
        masks.append(comp)
        seen |= comp
    return masks


def connected_components(g):
    """Vertex-disjoint connected subgraphs covering g, in vertex order."""
    return [g.subgraph(list(_bits(m))) for m in _component_masks(g.n, g.adj)]


def _component_code(comp):
    order, aut = _canon.canonical_colored(comp.n, comp.adj)
    relabeled = comp.relabel(order) if comp.n else comp
    code = bytes([comp.n]) + b"".join(row.to_bytes(8, "big") for row in relabeled.adj)
    return code, aut, relabeled


def canonical_form(g):
    """Canonical code plus automorphism group order.

    Codes are equal exactly for isomorphic graphs; computed per
    connected component so unions of symmetric pieces stay cheap.
    """
    pieces = [_component_code(c) for c in connected_components(g)]
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
    code = bytes([g.n]) + b"".join(
        len(p[0]).to_bytes(2, "big") + p[0] for p in pieces
    )
    return CanonicalCode(code, aut)


def canonical_relabel(g):
    """A canonical representative of g's isomorphism class."""
    pieces = [_component_code(c) for c in connected_components(g)]
    pieces.sort(key=lambda p: p[0])
    out = empty_graph(0)
    for _, _, comp in pieces:
        out = out.disjoint_union(comp)
    return out


def is_isomorphic_bruteforce(g, h):
    """Permutation-by-permutation isomorphism check (test oracle sizes)."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    from itertools import permutations

    for perm in permutations(range(g.n)):
        if all(
            h.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return g.n == 0


# -- embeddings --------------------------------------------------------


class NotFound:
    """Exhaustive search completed without a match."""

    def __repr__(self):
        return "NotFound()"

    def __eq__(self, other):
        return isinstance(other, NotFound)


class BudgetExceeded:
    """Search stopped after exhausting its node-expansion budget."""

    def __init__(self, nodes):
        self.nodes = nodes

    def __repr__(self):
        return f"BudgetExceeded(nodes={self.nodes})"


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices into a host."""

    pattern: SimpleGraph
    mode: str
    mapping: tuple

    def verify(self, host):
        n = self.pattern.n
        if len(set(self.mapping)) != n:
            return False
        for u in range(n):
            for v in range(u + 1, n):
                host_edge = host.adjacent(self.mapping[u], self.mapping[v])
                if self.pattern.has_edge(u, v) and not host_edge:
                    return False
                if self.mode == "induced" and not self.pattern.has_edge(u, v) and host_edge:
                    return False
        return True

    def to_json(self, host=None):
        if host is not None:
            mapped = [[v, host.vertex_label(w)] for v, w in enumerate(self.mapping)]
        else:
            mapped = [[v, w] for v, w in enumerate(self.mapping)]
        return {
            "mode": self.mode,
            "pattern": self.pattern.to_json(),
            "map": mapped,
        }


def _search_order(g):
    """Pattern vertex order: max degree first, then neighbors-first growth."""
    if g.n == 0:
        return []
    remaining = set(range(g.n))
    order = []
    start = max(remaining, key=lambda v: (g.degree(v), -v))
    order.append(start)
    remaining.discard(start)
    while remaining:
        placed = set(order)
        best = max(
            remaining,
            key=lambda v: (
                sum(1 for u in g.neighbors(v) if u in placed),
                g.degree(v),
                -v,
            ),
        )
        order.append(best)
        remaining.discard(best)
    return order


def find_embedding(pattern, host, mode="induced", budget=None):
    """Search for an induced-subgraph or subgraph embedding.

    Deterministic backtracking: pattern vertices most-constrained first,
    host candidates in vertex order. Returns an :class:`Embedding`, or
    :class:`NotFound` only after exhausting the search space, or
    :class:`BudgetExceeded` after ``budget`` node expansions.
    """
    if mode not in ("induced", "subgraph"):
        raise GraphError(f"unknown embedding mode {mode!r}")
    if pattern.n > host.order:
        return NotFound()
    if budget is not None and budget <= 0:
        return BudgetExceeded(0)
    if pattern.n == 0:
        return Embedding(pattern, mode, ())
    order = _search_order(pattern)
    pos_of = {v: i for i, v in enumerate(order)}
    earlier_nbrs = []
    earlier_nonnbrs = []
    for i, v in enumerate(order):
        nbrs = [pos_of[u] for u in pattern.neighbors(v) if pos_of[u] < i]
        non = [
            j
            for j in range(i)
            if j not in nbrs
        ]
        earlier_nbrs.append(nbrs)
        earlier_nonnbrs.append(non)
    degs = [pattern.degree(v) for v in order]

    assign = [None] * pattern.n
    used = set()
    nodes = 0

    def rec(i):
        nonlocal nodes
        if i == pattern.n:
            return "found"
        if earlier_nbrs[i]:
            first = assign[earlier_nbrs[i][0]]
            base = host.neighbor_iter(first)
        else:
            base = host.vertices()
        for w in base:
            if w in used:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                return "budget"
            if host.degree(w) < degs[i]:
                continue
            ok = True
            for j in earlier_nbrs[i]:
                if not host.adjacent(w, assign[j]):
                    ok = False
                    break
            if ok and mode == "induced":
                for j in earlier_nonnbrs[i]:
                    if host.adjacent(w, assign[j]):
                        ok = False
                        break
            if not ok:
                continue
            assign[i] = w
            used.add(w)
            res = rec(i + 1)
            if res is not None:
                return res
            used.discard(w)
            assign[i] = None
        return None

    res = rec(0)
    if res == "budget":
        return BudgetExceeded(nodes)
    if res != "found":
        return NotFound()
    mapping = [None] * pattern.n
    for i, v in enumerate(order):
        mapping[v] = assign[i]
    emb = Embedding(pattern, mode, tuple(mapping))
    assert emb.verify(host)
    return emb


# -- spanning subgraphs ------------------------------------------------


def spanning_subgraphs(g):
    """Yield every (edge subset, spanning subgraph) pair, 2^|E| in total."""
    edges = g.edges()
    if len(edges) > 30:
        raise GraphError(f"{len(edges)} edges exceeds the 2^30 iteration cap")
    for mask in range(1 << len(edges)):
        subset = tuple(edges[i] for i in range(len(edges)) if mask >> i & 1)
        yield subset, SimpleGraph.from_edges(g.n, subset)


# -- exhaustive generation ---------------------------------------------

_GRAPH_CLASS_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def enumerate_graphs(n):
    """One canonical representative per isomorphism class on n vertices."""
    if n < 0 or n > 8:
        raise GraphError("class enumeration capped at 8 vertices")
    if n == 0:
        return [empty_graph(0)]
    level = {canonical_form(empty_graph(1)).code: empty_graph(1)}
    for m in range(2, n + 1):
        nxt = {}
        for g in level.values():
            for mask in range(1 << (m - 1)):
                h = g.add_vertex(mask)
                code = canonical_form(h).code
                if code not in nxt:
                    nxt[code] = canonical_relabel(h)
        level = nxt
    return [level[c] for c in sorted(level)]


def enumerate_trees(n):
    """One representative per tree isomorphism class on n vertices."""
    if n < 1 or n > 10:
        raise GraphError("tree enumeration capped at 10 vertices")
    level = {canonical_form(empty_graph(1)).code: empty_graph(1)}
    for m in range(2, n + 1):
        nxt = {}
        for t in level.values():
            for v in range(t.n):
                s = t.add_vertex(1 << v)
                code = canonical_form(s).code
                if code not in nxt:
                    nxt[code] = canonical_relabel(s)
        level = nxt
    return [level[c] for c in sorted(level)]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

"""Homomorphism counting and generating functions into finite hosts.

Counts are exact arbitrary-precision integers. Complete hosts use the
independent-partition expansion (proper colorings split the vertex set
into independent blocks), which keeps tree-sized patterns fast; explicit
hosts of at most 64 vertices go through the compiled kernel; everything
else backtracks over neighbor sets with an optional node budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .graphs import GraphError, _bits, _search_order, enumerate_graphs
from .hosts import ExplicitHost


class BudgetExhausted(RuntimeError):
    """Search budget ran out; no count is reported rather than a wrong one."""


@dataclass(frozen=True)
class MonomialPoly:
    """Sparse generating function: image multiset -> coefficient."""

    graph_order: int
    terms: tuple  # sorted ((host vertices...), coeff) pairs

    @property
    def term_map(self):
        return dict(self.terms)

    def total_mass(self):
        return sum(c for _, c in self.terms)

    def to_json(self, host=None):
        out = []
        for image, coeff in self.terms:
            if host is not None:
                rendered = [host.vertex_label(w) for w in image]
            else:
                rendered = list(image)
            out.append({"image": rendered, "coeff": str(coeff)})
        return {"graphOrder": self.graph_order, "terms": out}


def _pattern_masks(g, order):
    masks = []
    for i, v in enumerate(order):
        m = 0
        for j in range(i):
            if g.has_edge(v, order[j]):
                m |= 1 << j
        masks.append(m)
    return masks


def _independent_partition_counts(g):
    """counts[j] = partitions of V(g) into j nonempty independent sets."""
    n = g.n
    full = (1 << n) - 1
    prev = [0] * (full + 1)
    prev[0] = 1
    totals = [0] * (n + 1)
    if n == 0:
        totals[0] = 1
        return totals
    for j in range(1, n + 1):
        cur = [0] * (full + 1)
        for mask in range(1, full + 1):
            low = mask & -mask
            v = low.bit_length() - 1
            allowed = mask & ~g.adj[v] & ~low
            acc = 0
            # independent blocks containing v, elements added in increasing order
            stack = [(allowed, low)]
            while stack:
                avail, block = stack.pop()
                acc += prev[mask ^ block]
                while avail:
                    b = avail & -avail
                    avail ^= b
                    u = b.bit_length() - 1
                    stack.append((avail & ~g.adj[u], block | b))
            cur[mask] = acc
        totals[j] = cur[full]
        prev = cur
    return totals


def count_hom(g, host, weak=False, budget=None):
    """Exact number of (weak) homomorphisms from g into the host."""
    if g.n == 0:
        return 1
    if host.kind == "complete":
        n = host.order
        if weak:
            return n**g.n
        counts = _independent_partition_counts(g)
        return sum(counts[j] * math.perm(n, j) for j in range(len(counts)))
    order = _search_order(g)
    masks = _pattern_masks(g, order)
    rows = host.neighbor_masks()
    if rows is not None and g.n <= 16:
        count, exceeded = kernels.hom_count(masks, rows, weak=weak, budget=budget)
        if exceeded:
            raise BudgetExhausted(f"homomorphism count stopped after {budget} nodes")
        return count
    return _count_generic(g, host, order, masks, weak, budget)


def _neighbor_sets(host, weak):
    cache = {}

    def get(w):
        s = cache.get(w)
        if s is None:
            s = frozenset(host.neighbor_iter(w))
            if weak:
                s = s | {w}
            cache[w] = s
        return s

    return get


def _count_generic(g, host, order, masks, weak, budget):
    nbrs = _neighbor_sets(host, weak)
    nodes = 0
    nv = g.n

    def rec(d, assigned):
        nonlocal nodes
        earlier = masks[d]
        cands = None
        m = earlier
        while m:
            j = (m & -m).bit_length() - 1
            s = nbrs(assigned[j])
            cands = s if cands is None else cands & s
            m &= m - 1
        pool = cands if cands is not None else host.vertices()
        if d == nv - 1:
            return len(pool) if cands is not None else host.order
        total = 0
        for w in sorted(pool):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExhausted(f"homomorphism count stopped after {budget} nodes")
            total += rec(d + 1, assigned + (w,))
        return total

    return rec(0, ())


def count_weak_hom(g, host, budget=None):
    return count_hom(g, host, weak=True, budget=budget)


def hom_generating_function(g, host, weak=False, budget=None):
    """One term per (weak) homomorphism, grouped by image multiset."""
    if g.n == 0:
        return MonomialPoly(0, (((), 1),))
    order = _search_order(g)
    masks = _pattern_masks(g, order)
    nbrs = _neighbor_sets(host, weak)
    terms = {}
    nodes = 0
    nv = g.n
    assigned = [None] * nv

    def rec(d):
        nonlocal nodes
        cands = None
        m = masks[d]
        while m:
            j = (m & -m).bit_length() - 1
            s = nbrs(assigned[j])
            cands = s if cands is None else cands & s
            m &= m - 1
        pool = sorted(cands) if cands is not None else host.vertices()
        for w in pool:
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExhausted(f"enumeration stopped after {budget} nodes")
            assigned[d] = w
            if d == nv - 1:
                key = tuple(sorted(assigned))
                terms[key] = terms.get(key, 0) + 1
            else:
                rec(d + 1)
        assigned[d] = None

    rec(0)
    return MonomialPoly(nv, tuple(sorted(terms.items())))


def weak_hom_generating_function(g, host, budget=None):
    return hom_generating_function(g, host, weak=True, budget=budget)


def chromatic_polynomial(g):
    """Coefficients (ascending) of the polynomial counting maps into K_n.

    Interpolates the counts at n = 0..|V| with exact finite differences;
    the result always has integer coefficients.
    """
    if g.n > 12:
        raise GraphError("chromatic polynomial capped at 12 vertices")
    from .hosts import CompleteHost

    n = g.n
    values = [count_hom(g, CompleteHost(j)) for j in range(n + 1)]
    diffs = list(values)
    deltas = [diffs[0]]
    for _ in range(n):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        deltas.append(diffs[0])
    coeffs = [Fraction(0)] * (n + 1)
    falling = [Fraction(1)]  # coefficients of x(x-1)...(x-j+1), ascending
    for j, d in enumerate(deltas):
        if j > 0:
            new = [Fraction(0)] * (len(falling) + 1)
            for i, c in enumerate(falling):
                new[i + 1] += c
                new[i] -= c * (j - 1)
            falling = new
        scale = Fraction(d, math.factorial(j))
        for i, c in enumerate(falling):
            coeffs[i] += scale * c
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def evaluate_polynomial(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def hom_profile(g, max_host_order):
    """Counts into every host class of order 1..max_host_order.

    Hosts are ordered by (order, canonical code); the profile tuple is a
    graph invariant, complete once the host order is unbounded.
    """
    if max_host_order > 6:
        raise GraphError("profile hosts capped at 6 vertices")
    counts = []
    for n in range(1, max_host_order + 1):
        for h in enumerate_graphs(n):
            counts.append(count_hom(g, ExplicitHost(h)))
    return tuple(counts)


def profile_hosts(max_host_order):
    """The host list backing hom_profile, in profile order."""
    out = []
    for n in range(1, max_host_order + 1):
        out.extend(enumerate_graphs(n))
    return out

"""Finite fields GF(p^d), Paley graphs, and constructive embeddings.

Elements are polynomial residues stored as coefficient tuples, lowest
degree first; the deterministic element order is lexicographic on those
tuples, which matches integer ranks with the constant coefficient most
significant. All scans walk ranks in that order and return the first
witness, so every search below is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Embedding, GraphError, NotFound, complete_bipartite, cycle_graph, path_graph
from .hosts import HostGraph

SCAN_CAP = 10**6


class FieldError(ValueError):
    pass


# -- polynomial helpers (coefficient lists, low degree first) ----------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_powmod(base, e, m, p):
    result = [1]
    b = _poly_rem(list(base), m, p)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, b, p), m, p)
        b = _poly_rem(_poly_mul(b, b, p), m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(modulus, p, d):
    x = [0, 1]
    xq = _poly_powmod(x, p**d, modulus, p)
    diff = _trim([(a - b) % p for a, b in _zip_pad(xq, x, p)])
    if diff:
        return False
    for r in _prime_factors(d):
        xe = _poly_powmod(x, p ** (d // r), modulus, p)
        diff = _trim([(a - b) % p for a, b in _zip_pad(xe, x, p)])
        g = _poly_gcd(modulus, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def _zip_pad(a, b, p):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


# -- field specification -----------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^d) described by a monic irreducible modulus (low-first coeffs)."""

    p: int
    d: int
    modulus: tuple

    def __post_init__(self):
        if self.p < 3 or not _is_prime(self.p):
            raise FieldError(f"{self.p} is not an odd prime")
        if self.d < 1:
            raise FieldError("extension degree must be >= 1")
        m = list(self.modulus)
        if len(m) != self.d + 1 or m[-1] != 1:
            raise FieldError("modulus must be monic of degree d")
        if any(not 0 <= c < self.p for c in m):
            raise FieldError("modulus coefficients out of range")
        if self.d > 1 and not _is_irreducible(m, self.p, self.d):
            raise FieldError("modulus is reducible")

    @property
    def q(self):
        return self.p**self.d

    def element(self, coeffs):
        if isinstance(coeffs, int):
            return FieldElement(self, (coeffs % self.p,) + (0,) * (self.d - 1))
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.d:
            raise FieldError("coefficient sequence has wrong length")
        return FieldElement(self, coeffs)

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    def from_rank(self, r):
        coeffs = []
        for i in range(self.d):
            pw = self.p ** (self.d - 1 - i)
            coeffs.append((r // pw) % self.p)
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        return (self.from_rank(r) for r in range(self.q))

    def mul_coeffs(self, a, b):
        prod = _poly_rem(_poly_mul(list(a), list(b), self.p), list(self.modulus), self.p)
        return tuple(prod) + (0,) * (self.d - len(prod))

    def to_json(self):
        return {"p": self.p, "d": self.d, "modulus": list(self.modulus)}


class FieldElement:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        self.spec = spec
        self.coeffs = coeffs

    @property
    def rank(self):
        r = 0
        p, d = self.spec.p, self.spec.d
        for i, c in enumerate(self.coeffs):
            r += c * p ** (d - 1 - i)
        return r

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul_coeffs(self.coeffs, other.coeffs))

    def inv(self):
        """Multiplicative inverse via extended gcd with the modulus."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero element")
        p = self.spec.p
        m = list(self.spec.modulus)
        r0, r1 = m, _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(
                [(a - b) % p for a, b in _zip_pad(s0, _poly_mul(q, s1, p), p)]
            )
        lead_inv = pow(r0[-1], -1, p)
        inv = [c * lead_inv % p for c in s0]
        inv = _poly_rem(inv, m, p)
        return FieldElement(self.spec, tuple(inv) + (0,) * (self.spec.d - len(inv)))

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.spec.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.spec), self.coeffs))

    def __repr__(self):
        return f"FieldElement{self.coeffs}"


def _poly_divmod(a, b, p):
    a = list(a)
    quot = [0] * max(1, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], -1, p)
    while a and len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return _trim(quot), a


@lru_cache(maxsize=None)
def find_irreducible(p, d):
    """Lexicographically smallest monic irreducible of degree d over GF(p).

    Coefficients are compared low degree first; degree 1 uses the plain
    modulus x.
    """
    if not _is_prime(p) or p < 3:
        raise FieldError(f"{p} is not an odd prime")
    if d < 1:
        raise FieldError("degree must be >= 1")
    if d == 1:
        return FieldSpec(p, 1, (0, 1))
    from itertools import product

    for tail in product(range(p), repeat=d):
        if tail[0] == 0:  # divisible by x
            continue
        modulus = tuple(tail) + (1,)
        if any(_poly_eval(modulus, v, p) == 0 for v in range(p)):
            continue
        if _is_irreducible(list(modulus), p, d):
            return FieldSpec(p, d, modulus)
    raise AssertionError("no irreducible polynomial found")


def _poly_eval(coeffs, v, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * v + c) % p
    return acc


def is_square(e):
    """Euler criterion; zero is neither a square nor a non-square."""
    if e.is_zero():
        raise FieldError("zero has no quadratic character; see quadratic_character")
    return (e ** ((e.spec.q - 1) // 2)) == e.spec.one


def quadratic_character(e):
    """1 for nonzero squares, -1 for non-squares, 0 for zero."""
    if e.is_zero():
        return 0
    return 1 if is_square(e) else -1


def primitive_element(spec):
    """Smallest element (in rank order) of multiplicative order q - 1."""
    q = spec.q
    factors = _prime_factors(q - 1)
    for e in spec.elements():
        if e.is_zero():
            continue
        if all((e ** ((q - 1) // r)) != spec.one for r in factors):
            assert e ** (q - 1) == spec.one
            return e
    raise AssertionError("no primitive element found")


# -- Paley hosts --------------------------------------------------------


class PaleyHost(HostGraph):
    """Paley graph on GF(q), q = 1 mod 4; adjacency by nonzero squares."""

    kind = "paley"

    def __init__(self, spec):
        q = spec.q
        if q % 4 != 1:
            raise FieldError(
                f"Paley graph needs q = 1 mod 4, got q = {q}; adjacency would be asymmetric"
            )
        if q > SCAN_CAP:
            raise FieldError(f"field order {q} exceeds the {SCAN_CAP} scan cap")
        self.spec = spec
        self.q = q
        p, d = spec.p, spec.d
        self._powers = np.array([p ** (d - 1 - i) for i in range(d)], dtype=np.int64)
        r = np.arange(q, dtype=np.int64)
        self._digits = np.empty((q, d), dtype=np.int64)
        for i in range(d):
            self._digits[:, i] = (r // self._powers[i]) % p
        self._squares = self._square_table()
        self._masks = None

    def _square_table(self):
        sq = np.zeros(self.q, dtype=bool)
        alpha = primitive_element(self.spec)
        a2 = self.spec.mul_coeffs(alpha.coeffs, alpha.coeffs)
        x = self.spec.one.coeffs
        for _ in range((self.q - 1) // 2):
            sq[_rank_of(self.spec, x)] = True
            x = self.spec.mul_coeffs(x, a2)
        return sq

    @property
    def order(self):
        return self.q

    def adjacent(self, u, v):
        if u == v:
            return False
        return bool(self._squares[self._diff_rank(u, v)])

    def _diff_rank(self, u, v):
        p = self.spec.p
        r = 0
        for pw in self._powers:
            pw = int(pw)
            du = (u // pw) % p
            dv = (v // pw) % p
            r += ((du - dv) % p) * pw
        return r

    def degree(self, v):
        return (self.q - 1) // 2

    def vertex_label(self, v):
        return [int(c) for c in self._digits[v]]

    def element_of(self, v):
        return self.spec.element(tuple(int(c) for c in self._digits[v]))

    def rank_of(self, e):
        return e.rank

    def adjacency_row(self, v):
        """Boolean numpy row: adjacency of every vertex to v."""
        p = self.spec.p
        diff = (self._digits - self._digits[v]) % p
        ranks = diff @ self._powers
        row = self._squares[ranks]
        row[v] = False
        return row

    def is_square_rank(self, v):
        return bool(self._squares[v])

    def neighbor_iter(self, v):
        if self.q <= 4096:
            if self._masks is None:
                self._masks = [None] * self.q
            if self._masks[v] is None:
                self._masks[v] = np.nonzero(self.adjacency_row(v))[0]
            return iter(int(u) for u in self._masks[v])
        return iter(int(u) for u in np.nonzero(self.adjacency_row(v))[0])

    def __repr__(self):
        return f"PaleyHost(q={self.q})"


def _rank_of(spec, coeffs):
    r = 0
    for i, c in enumerate(coeffs):
        r += c * spec.p ** (spec.d - 1 - i)
    return r


def paley_graph(spec):
    return PaleyHost(spec)


# -- subfield embedding -------------------------------------------------


class FieldEmbedding:
    """Ring embedding of a subfield, determined by a root of its modulus."""

    def __init__(self, sub, sup):
        if sub.p != sup.p:
            raise FieldError("subfield and extension have different characteristics")
        if sup.d % sub.d:
            raise FieldError(
                f"degree {sub.d} does not divide {sup.d}; no subfield embedding"
            )
        self.sub = sub
        self.sup = sup
        if sub.d == 1:
            self._powers = [sup.one]
        else:
            root = self._smallest_root()
            self._powers = [sup.one]
            for _ in range(1, sub.d):
                self._powers.append(self._powers[-1] * root)

    def _smallest_root(self):
        mod = list(self.sub.modulus)
        for cand in self.sup.elements():
            acc = self.sup.zero
            power = self.sup.one
            for c in mod:
                if c:
                    acc = acc + power * self.sup.element(c)
                power = power * cand
            if acc.is_zero():
                return cand
        raise AssertionError("modulus has no root in the extension")

    def __call__(self, e):
        out = self.sup.zero
        for c, pw in zip(e.coeffs, self._powers):
            if c:
                out = out + pw * self.sup.element(c)
        return out


def subfield_embedding(sub, sup):
    return FieldEmbedding(sub, sup)


# -- constructive embeddings into Paley hosts ---------------------------


def _host_of(host_or_spec):
    if isinstance(host_or_spec, PaleyHost):
        return host_or_spec
    return PaleyHost(host_or_spec)


def _scaffold(sub_spec, host):
    """Common setup: embedded subfield multiples of the first non-residue."""
    sup = host.spec
    if sup.d % sub_spec.d or (sup.d // sub_spec.d) % 2:
        raise FieldError("host field must be an even-degree extension of the subfield")
    if sub_spec.q < 5:
        raise FieldError("subfield order must be at least 5")
    embed = FieldEmbedding(sub_spec, sup)
    sub_elems = list(sub_spec.elements())
    x = None
    for r in range(1, host.q):
        if not host.is_square_rank(r):
            x = host.element_of(r)
            break
    assert x is not None
    a_elems = [embed(a) * x for a in sub_elems]
    return embed, sub_elems, x, a_elems


def _exact_adjacency_scan(host, required, forbidden, excluded_ranks):
    """First rank adjacent to all of `required`, none of `forbidden`."""
    mask = np.ones(host.q, dtype=bool)
    for e in required:
        mask &= host.adjacency_row(e.rank)
    for e in forbidden:
        mask &= ~host.adjacency_row(e.rank)
    for r in excluded_ranks:
        mask[r] = False
    hits = np.nonzero(mask)[0]
    return int(hits[0]) if len(hits) else None


def complete_bipartite_embedding(sub_spec, host_or_spec):
    """Induced K_{q-1,q-1} from two subfield multiple classes, if a hub exists.

    Scans for y outside A = F_q x adjacent to every element of A minus
    zero; below the guarantee bound the scan may fail, which is reported
    as NotFound rather than an error.
    """
    host = _host_of(host_or_spec)
    embed, sub_elems, _, a_elems = _scaffold(sub_spec, host)
    a_nonzero = [e for e in a_elems if not e.is_zero()]
    a_ranks = {e.rank for e in a_elems}
    y_rank = _exact_adjacency_scan(
        host,
        required=a_nonzero,
        forbidden=[host.spec.zero],
        excluded_ranks=a_ranks,
    )
    if y_rank is None:
        return NotFound()
    y = host.element_of(y_rank)
    b_nonzero = [embed(a) * y for a in sub_elems if not a.is_zero()]
    q = sub_spec.q
    pattern = complete_bipartite(q - 1, q - 1)
    mapping = tuple(e.rank for e in a_nonzero) + tuple(e.rank for e in b_nonzero)
    emb = Embedding(pattern, "induced", mapping)
    assert emb.verify(host), "constructed bipartite embedding failed verification"
    return emb


def even_cycle_embedding(sub_spec, host_or_spec, target=None):
    """Induced even cycles and paths from the alternating construction.

    target: ("cycle", L) for even L between 4 and 2(q-1), or ("path", j)
    for j < 2(q-1); None means the full C_{2(q-1)}.
    """
    host = _host_of(host_or_spec)
    embed, sub_elems, x, a_elems = _scaffold(sub_spec, host)
    q = sub_spec.q
    if target is None:
        target = ("cycle", 2 * (q - 1))
    kind, size = target
    alpha = primitive_element(sub_spec)
    alpha_h = embed(alpha)
    ax = alpha_h * x
    others = [e for e in a_elems if e.rank not in (x.rank, ax.rank)]
    y_rank = _exact_adjacency_scan(
        host,
        required=[x, ax],
        forbidden=others,
        excluded_ranks={e.rank for e in a_elems},
    )
    if y_rank is None:
        return NotFound()
    y = host.element_of(y_rank)
    xs = [x]
    ys = [y]
    for _ in range(q - 2):
        xs.append(alpha_h * xs[-1])
        ys.append(alpha_h * ys[-1])
    ring = []
    for xi, yi in zip(xs, ys):
        ring.extend([xi, yi])

    if kind == "cycle" and size == 2 * (q - 1):
        chosen = ring
        pattern = cycle_graph(size)
    elif kind == "cycle":
        if size % 2 or not 4 <= size < 2 * (q - 1):
            raise FieldError(f"even cycle length {size} outside 4..{2 * (q - 1)}")
        k = size // 2 - 1
        y1 = y - x
        z = (alpha_h - host.spec.one).inv() * y1
        chosen = [item for pair in zip(xs[:k], ys[:k]) for item in pair]
        chosen.extend([(alpha_h**k) * z, z])
        pattern = cycle_graph(size)
    elif kind == "path":
        if not 1 <= size < 2 * (q - 1):
            raise FieldError(f"path order {size} outside 1..{2 * (q - 1) - 1}")
        chosen = ring[:size]
        pattern = path_graph(size)
    else:
        raise FieldError(f"unknown target kind {kind!r}")
    emb = Embedding(pattern, "induced", tuple(e.rank for e in chosen))
    assert emb.verify(host), "constructed cycle embedding failed verification"
    return emb


def odd_cycle_embedding(sub_spec, host_or_spec, k):
    """Induced C_{2k+1}: even-cycle scaffold plus a doubly-attached vertex."""
    host = _host_of(host_or_spec)
    embed, sub_elems, x, a_elems = _scaffold(sub_spec, host)
    q = sub_spec.q
    if not 2 <= k <= q - 1:
        raise FieldError(f"odd cycle parameter k={k} outside 2..{q - 1}")
    alpha = primitive_element(sub_spec)
    alpha_h = embed(alpha)
    ax = alpha_h * x
    others = [e for e in a_elems if e.rank not in (x.rank, ax.rank)]
    a_ranks = {e.rank for e in a_elems}
    y_rank = _exact_adjacency_scan(host, [x, ax], others, a_ranks)
    if y_rank is None:
        return NotFound()
    y = host.element_of(y_rank)
    b_elems = [embed(a) * y for a in sub_elems]
    ab = {e.rank for e in a_elems} | {e.rank for e in b_elems}
    required = [host.spec.zero, x]
    forbidden = [
        host.element_of(r) for r in sorted(ab) if r not in (0, x.rank)
    ]
    z_rank = _exact_adjacency_scan(host, required, forbidden, ab)
    if z_rank is None:
        return NotFound()
    z = host.element_of(z_rank)
    xs = [x]
    ys = [y]
    for _ in range(k - 1):
        xs.append(alpha_h * xs[-1])
        ys.append(alpha_h * ys[-1])
    chosen = []
    for i in range(k - 1):
        chosen.extend([xs[i], ys[i]])
    chosen.append(xs[k - 1])
    chosen.append((alpha_h ** (k - 1)) * z)
    chosen.append(z)
    pattern = cycle_graph(2 * k + 1)
    emb = Embedding(pattern, "induced", tuple(e.rank for e in chosen))
    assert emb.verify(host), "constructed odd cycle embedding failed verification"
    return emb


# -- bound calculators ---------------------------------------------------


def smallest_tower_level(base, threshold):
    """Smallest n >= 0 with base^(3^n) >= threshold, by exact powering."""
    if base < 2:
        raise FieldError("tower base must be at least 2")
    n = 0
    power = base
    while power < threshold:
        power = power**3
        n += 1
    return n


def induced_level_bound(q, k):
    """Level bound ceil(log_3 log_q ((k-1) 2^(k-2))) via integer comparisons."""
    if k <= 1:
        raise FieldError("graph order must be at least 2")
    if q < 2:
        raise FieldError("q must be at least 2")
    return smallest_tower_level(q, (k - 1) << max(k - 2, 0))


def bipartite_host_order_bound(q):
    """Host order above which the K_{q-1,q-1} hub scan is guaranteed."""
    if q < 5 or q % 2 == 0:
        raise FieldError("bound defined for odd q >= 5")
    c = math.comb(q - 1, (q - 1) // 2)
    return ((q - 3) * c + 3) ** 2


def odd_cycle_host_order_bound(q):
    """Host order above which the odd-cycle attachment scan is guaranteed."""
    if q < 3 or q % 2 == 0:
        raise FieldError("bound defined for odd q >= 3")
    c = math.comb(q - 1, (q - 1) // 2)
    return ((1 << q) * (q - 2) * c + 3) ** 2


def subgraph_level_bound(q, k):
    """Level bound ceil(log_3 log_q k) for plain subgraph containment."""
    if k <= 1:
        raise FieldError("graph order must be at least 2")
    if q < 2:
        raise FieldError("q must be at least 2")
    return smallest_tower_level(q, k)


BOUND_KINDS = {
    "thm52": lambda params: induced_level_bound(params["q"], params["k"]),
    "thm17_1": lambda params: induced_level_bound(params["q"], params["k"]),
    "lemma54": lambda params: bipartite_host_order_bound(params["q"]),
    "lemma58": lambda params: odd_cycle_host_order_bound(params["q"]),
    "upperBS": lambda params: subgraph_level_bound(params["q"], params["k"]),
}

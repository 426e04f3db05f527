# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contracts as ``hchroma.kernels._pure`` but restricted to hosts and
slices with at most 63 vertices and patterns with at most 16, which is
all the dispatch layer ever sends here. The Kneser kernel accumulates
into a caller-provided array indexed by the colex rank of the sorted
image multiset instead of a dict; the dispatcher unranks the nonzero
entries afterwards.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)

DEF MAXV = 16


def kneser_image_counts_ranked(pattern_masks, int num_subsets, disjoint_rows,
                               int64_t[::1] counts, int64_t[:, ::1] binom):
    """Fill ``counts[rank(sorted image)] += 1`` over all proper maps.

    ``binom[a, b]`` must hold C(a, b) for a < num_subsets + nv and
    b <= nv. Returns the total number of proper maps.
    """
    cdef int nv = len(pattern_masks)
    cdef uint64_t pat[MAXV]
    cdef uint64_t disj[64]
    cdef uint64_t avail[MAXV]
    cdef int assign[MAXV]
    cdef int buf[MAXV]
    cdef int d, i, j, s, v
    cdef uint64_t mask, m, full
    cdef int64_t total = 0
    cdef int64_t rank

    if nv == 0:
        counts[0] += 1
        return 1
    if nv > MAXV or num_subsets > 63:
        raise ValueError("compiled kernel limits exceeded")
    for i in range(nv):
        pat[i] = <uint64_t> pattern_masks[i]
    for i in range(num_subsets):
        disj[i] = <uint64_t> disjoint_rows[i]
    full = (<uint64_t> 1 << num_subsets) - 1

    d = 0
    mask = full
    m = pat[0]
    while m:
        j = _lowbit(m)
        mask &= disj[assign[j]]
        m &= m - 1
    avail[0] = mask
    while d >= 0:
        if avail[d] == 0:
            d -= 1
            continue
        s = _lowbit(avail[d])
        avail[d] &= avail[d] - 1
        assign[d] = s
        if d == nv - 1:
            # insertion sort of the image, then colex multiset rank
            for i in range(nv):
                buf[i] = assign[i]
            for i in range(1, nv):
                v = buf[i]
                j = i - 1
                while j >= 0 and buf[j] > v:
                    buf[j + 1] = buf[j]
                    j -= 1
                buf[j + 1] = v
            rank = 0
            for i in range(nv):
                rank += binom[buf[i] + i, i + 1]
            counts[rank] += 1
            total += 1
        else:
            d += 1
            mask = full
            m = pat[d]
            while m:
                j = _lowbit(m)
                mask &= disj[assign[j]]
                m &= m - 1
            avail[d] = mask
    return total


def hom_count(pattern_masks, host_rows, bint weak=False, int64_t budget=-1):
    """Exact (weak) homomorphism count; see the pure version."""
    cdef int nv = len(pattern_masks)
    cdef int nh = len(host_rows)
    cdef uint64_t pat[MAXV]
    cdef uint64_t rows[64]
    cdef uint64_t avail[MAXV]
    cdef int assign[MAXV]
    cdef int d, i, j, w
    cdef uint64_t mask, m, full
    cdef int64_t total = 0
    cdef int64_t nodes = 0

    if nv == 0:
        return 1, False
    if nh == 0:
        return 0, False
    if nv > MAXV or nh > 64:
        raise ValueError("compiled kernel limits exceeded")
    for i in range(nv):
        pat[i] = <uint64_t> pattern_masks[i]
    for i in range(nh):
        rows[i] = <uint64_t> host_rows[i]
        if weak:
            rows[i] |= <uint64_t> 1 << i
    if nh == 64:
        full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        full = (<uint64_t> 1 << nh) - 1

    d = 0
    avail[0] = _cand(0, pat, rows, assign, full)
    nodes = 1
    if budget >= 0 and nodes > budget:
        return 0, True
    while d >= 0:
        if avail[d] == 0:
            d -= 1
            continue
        if d == nv - 1:
            total += _popcount(avail[d])
            avail[d] = 0
            continue
        w = _lowbit(avail[d])
        avail[d] &= avail[d] - 1
        assign[d] = w
        d += 1
        nodes += 1
        if budget >= 0 and nodes > budget:
            return total, True
        avail[d] = _cand(d, pat, rows, assign, full)
    return total, False


cdef inline uint64_t _cand(int d, uint64_t* pat, uint64_t* rows,
                           int* assign, uint64_t full):
    cdef uint64_t mask = full
    cdef uint64_t m = pat[d]
    cdef int j
    while m:
        j = _lowbit(m)
        mask &= rows[assign[j]]
        m &= m - 1
    return mask


cdef inline int _lowbit(uint64_t x):
    return __builtin_ctzll(x)


cdef inline int _popcount(uint64_t x):
    return __builtin_popcountll(x)

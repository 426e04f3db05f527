"""Pure-Python enumeration kernels.

These are the reference implementations of the two hot loops: exhaustive
enumeration of proper maps into a finite Kneser slice, and homomorphism
counting into an explicit host. The compiled versions in ``_fast.pyx``
implement identical contracts; ``hchroma.kernels`` picks one at import
time. Patterns are passed as lower-triangular adjacency masks, i.e.
``pattern_masks[i]`` has bit ``j`` set iff ``j < i`` and vertices ``i``
and ``j`` are adjacent, with vertices already in assignment order.
"""


def kneser_image_counts(pattern_masks, num_subsets, disjoint_rows):
    """Count proper maps into a Kneser slice, grouped by image multiset.

    A map assigns every pattern vertex one of ``num_subsets`` slice
    vertices; it is proper when adjacent pattern vertices receive
    disjoint subsets (``disjoint_rows[s]`` = bitmask of subsets disjoint
    from ``s``). Returns ``{sorted image tuple: number of proper maps}``
    over all ``num_subsets ** len(pattern_masks)`` maps.
    """
    nv = len(pattern_masks)
    if nv == 0:
        return {(): 1}
    full = (1 << num_subsets) - 1
    counts = {}
    assign = [0] * nv

    def rec(d):
        mask = full
        m = pattern_masks[d]
        while m:
            j = (m & -m).bit_length() - 1
            mask &= disjoint_rows[assign[j]]
            m &= m - 1
        if d == nv - 1:
            base = assign[:d]
            while mask:
                s = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                key = tuple(sorted(base + [s]))
                counts[key] = counts.get(key, 0) + 1
        else:
            while mask:
                s = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                assign[d] = s
                rec(d + 1)

    rec(0)
    return counts


def hom_count(pattern_masks, host_rows, weak=False, budget=None):
    """Exact number of (weak) homomorphisms into an explicit host.

    ``host_rows[w]`` is the adjacency bitmask of host vertex ``w``. In
    weak mode an edge may also collapse to a single host vertex. Budget
    counts search-node expansions; returns ``(count, exceeded)`` where
    ``exceeded`` means the count is a partial failure, never a wrong
    total.
    """
    nv = len(pattern_masks)
    nh = len(host_rows)
    if nv == 0:
        return 1, False
    if nh == 0:
        return 0, False
    full = (1 << nh) - 1
    rows = [r | (1 << w) for w, r in enumerate(host_rows)] if weak else list(host_rows)
    assign = [0] * nv
    state = {"total": 0, "nodes": 0, "exceeded": False}
    limit = -1 if budget is None else budget

    def rec(d):
        if state["exceeded"]:
            return
        if limit >= 0:
            state["nodes"] += 1
            if state["nodes"] > limit:
                state["exceeded"] = True
                return
        mask = full
        m = pattern_masks[d]
        while m:
            j = (m & -m).bit_length() - 1
            mask &= rows[assign[j]]
            m &= m - 1
        if d == nv - 1:
            state["total"] += mask.bit_count()
            return
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            assign[d] = w
            rec(d + 1)
            if state["exceeded"]:
                return

    rec(0)
    return state["total"], state["exceeded"]

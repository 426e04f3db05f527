"""Canonical labeling for small vertex-colored graphs.

Iterative degree refinement followed by backtracking over the smallest
non-singleton cell, keeping the lexicographically least adjacency
encoding. Counts the leaves that achieve the minimum, which is exactly
the automorphism group order (for colored graphs, the color-preserving
one). Sized for n <= 64 with adjacency as Python int bitmasks; callers
split into connected components first so the symmetric worst cases stay
small.
"""

from collections import deque


def refine(adj, cells):
    """Refine an ordered partition to equitability.

    Each cell is split by neighbor counts against splitter cells taken
    from a FIFO worklist; fragments are ordered by ascending count, so
    the result is deterministic and label-invariant.
    """
    cells = [list(c) for c in cells]
    queue = deque(_mask(c) for c in cells)
    while queue:
        w = queue.popleft()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for key in sorted(groups):
                    sub = groups[key]
                    out.append(sub)
                    queue.append(_mask(sub))
        cells = out
    return cells


def canonical_colored(n, adj, colors=None):
    """Canonical vertex order and |Aut| for a colored graph.

    Returns ``(order, aut)`` where ``order[i]`` is the input vertex
    placed at canonical position ``i``. Isomorphic inputs (with matching
    colors) produce orders under which the relabeled adjacency rows are
    identical. Cells never cross color classes, so positions of each
    color are fixed across all leaves.
    """
    if n == 0:
        return (), 1
    if colors is None:
        colors = [0] * n
    by_color = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    initial = [by_color[c] for c in sorted(by_color)]

    best = {"code": None, "order": None, "aut": 0}

    def encode(order):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = adj[v]
            r = 0
            while m:
                u = (m & -m).bit_length() - 1
                r |= 1 << pos[u]
                m &= m - 1
            rows.append(r)
        return tuple(rows)

    def dfs(cells):
        cells = refine(adj, cells)
        target = -1
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target < 0 or len(c) < len(cells[target])):
                target = idx
        if target < 0:
            order = tuple(v for c in cells for v in c)
            code = encode(order)
            if best["code"] is None or code < best["code"]:
                best.update(code=code, order=order, aut=1)
            elif code == best["code"]:
                best["aut"] += 1
            return
        cell = cells[target]
        for v in sorted(cell):
            rest = [u for u in cell if u != v]
            dfs(cells[:target] + [[v], rest] + cells[target + 1 :])

    dfs(initial)
    return best["order"], best["aut"]


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m

"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The compiled module handles slices/hosts of up to 63 vertices and
patterns of up to 16, which covers everything the library sends through
the hot paths. Anything larger, and any call with ``force_pure=True``,
goes to the reference implementations. ``benchmarks/bench_kernels.py``
compares the two.
"""

import math

import numpy as np

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built; pure fallback
    _fast = None

USING_COMPILED = _fast is not None


def kneser_image_counts(pattern_masks, num_subsets, disjoint_rows, force_pure=False):
    """Proper-map counts grouped by sorted image tuple; see ``_pure``."""
    nv = len(pattern_masks)
    if force_pure or _fast is None or num_subsets > 63 or nv > 16:
        return _pure.kneser_image_counts(pattern_masks, num_subsets, disjoint_rows)
    if nv == 0:
        return {(): 1}
    size = math.comb(num_subsets + nv - 1, nv)
    counts = np.zeros(size, dtype=np.int64)
    binom = _binom_table(num_subsets + nv, nv + 1)
    _fast.kneser_image_counts_ranked(
        list(pattern_masks), num_subsets, list(disjoint_rows), counts, binom
    )
    return _unrank_nonzero(counts, nv, binom)


def hom_count(pattern_masks, host_rows, weak=False, budget=None, force_pure=False):
    """(count, budget_exceeded) for homomorphisms into an explicit host."""
    if force_pure or _fast is None or len(host_rows) > 64 or len(pattern_masks) > 16:
        return _pure.hom_count(pattern_masks, host_rows, weak=weak, budget=budget)
    limit = -1 if budget is None else budget
    return _fast.hom_count(list(pattern_masks), list(host_rows), weak, limit)


def _binom_table(rows, cols):
    table = np.zeros((rows, cols), dtype=np.int64)
    for a in range(rows):
        for b in range(min(a, cols - 1) + 1):
            table[a, b] = math.comb(a, b)
    return table


def _unrank_nonzero(counts, nv, binom):
    """Invert the colex multiset rank for every nonzero entry, vectorized."""
    ranks = np.nonzero(counts)[0]
    if len(ranks) == 0:
        return {}
    values = counts[ranks]
    rem = ranks.astype(np.int64)
    cols = np.empty((len(ranks), nv), dtype=np.int64)
    for i in range(nv - 1, -1, -1):
        col = binom[:, i + 1]
        d = np.searchsorted(col, rem, side="right") - 1
        # searchsorted on a column with leading zeros: C(a, b) = 0 for a < b,
        # so clamp to the first index where the value is actually <= rem
        d = np.maximum(d, i)
        rem = rem - col[d]
        cols[:, i] = d - i
    out = {}
    for row, c in zip(cols, values):
        out[tuple(int(x) for x in row)] = int(c)
    return out

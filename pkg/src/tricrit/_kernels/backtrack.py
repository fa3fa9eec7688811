"""Backtracking kernels over int64 adjacency bitmasks.

Vertex order is the caller's concern: masks[i] holds the neighbors of the
i-th vertex *in the chosen order*, as position bits. All masks fit in 62
bits, so plain int64 arithmetic is safe in both the compiled and the pure
paths.
"""

from __future__ import annotations

import numpy as np

from . import jit


@jit
def count_colorings(masks, n, k):
    """Count proper labeled k-colorings by exhaustive backtracking.

    Exact for any k >= 1; intended for k <= 4 on small graphs. Returns
    the count as int64.
    """
    if n == 0:
        return 1
    assign = np.full(n, -1, np.int8)
    trycls = np.zeros(n, np.int8)
    class_masks = np.zeros(k, np.int64)
    count = 0
    v = 0
    while v >= 0:
        if v == n:
            count += 1
            v -= 1
            c = assign[v]
            class_masks[c] &= ~(1 << v)
            assign[v] = -1
            trycls[v] = c + 1
            continue
        c = trycls[v]
        while c < k and (class_masks[c] & masks[v]) != 0:
            c += 1
        if c >= k:
            v -= 1
            if v >= 0:
                c2 = assign[v]
                class_masks[c2] &= ~(1 << v)
                assign[v] = -1
                trycls[v] = c2 + 1
            continue
        assign[v] = c
        class_masks[c] |= 1 << v
        v += 1
        if v < n:
            trycls[v] = 0
    return count


@jit
def enumerate_partitions(masks, n, fixed, n_fixed_classes, cap, out):
    """Enumerate partitions into <= 3 independent classes, one per leaf.

    Duplicate partitions are avoided by restricted growth: a free vertex
    may open class j only when class j-1 is already open. Classes
    0..n_fixed_classes-1 are pre-opened by the ``fixed`` assignment
    (fixed[v] = -1 for free vertices); pass all -1 and 0 for plain
    enumeration. Assignments are written to out[i, :]; enumeration stops
    once ``cap`` partitions are stored.

    Returns (found, hit_cap).
    """
    if n == 0:
        return 1, 0
    assign = np.full(n, -1, np.int8)
    trycls = np.zeros(n, np.int8)
    topmax = np.full(n + 1, -1, np.int8)
    topmax[0] = n_fixed_classes - 1
    class_masks = np.zeros(3, np.int64)
    found = 0
    hit_cap = 0
    v = 0
    while v >= 0:
        if v == n:
            for i in range(n):
                out[found, i] = assign[i]
            found += 1
            if found >= cap:
                hit_cap = 1
                break
            v -= 1
            c = assign[v]
            class_masks[c] &= ~(1 << v)
            assign[v] = -1
            trycls[v] = c + 1
            continue
        if fixed[v] >= 0:
            c = fixed[v]
            if trycls[v] > 0 or (class_masks[c] & masks[v]) != 0:
                c = 3  # force backtrack
        else:
            limit = topmax[v] + 1
            if limit > 2:
                limit = 2
            c = trycls[v]
            while c <= limit and (class_masks[c] & masks[v]) != 0:
                c += 1
            if c > limit:
                c = 3
        if c >= 3:
            v -= 1
            if v >= 0:
                c2 = assign[v]
                class_masks[c2] &= ~(1 << v)
                assign[v] = -1
                trycls[v] = c2 + 1
            continue
        assign[v] = c
        class_masks[c] |= 1 << v
        topmax[v + 1] = topmax[v] if topmax[v] > c else c
        v += 1
        if v < n:
            trycls[v] = 0
    return found, hit_cap

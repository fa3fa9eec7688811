"""Edge-deletion search over one triangulation, fully in kernel space.

Enumerates q-subsets of edges (optionally pairwise face-disjoint, i.e.
no two deleted edges bounding a common face), deletes them from the
adjacency masks and keeps subsets whose remainder is connected, has
minimum degree two and exactly one proper partition using three classes.
Survivors are rare; the caller re-verifies them with the full oracles.
"""

from __future__ import annotations

import numpy as np

from . import jit
from .backtrack import count_colorings, enumerate_partitions


@jit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@jit
def carve_triangulation(
    masks0,
    n,
    edge_u,
    edge_v,
    conflict_masks,
    q,
    independent,
    node_budget,
    out_subsets,
):
    """DFS over edge subsets of one triangulation.

    conflict_masks[e] is the bitmask of edges sharing a face with e (the
    independence filter). out_subsets is int64[cap, q]; returns
    (found, nodes, exhausted).
    """
    m = len(edge_u)
    cap = out_subsets.shape[0]
    chosen = np.empty(q, np.int64)
    start = np.empty(q + 1, np.int64)
    forbidden = np.zeros(q + 1, np.int64)
    cand = np.empty(n, np.int64)
    fixed = np.full(n, -1, np.int8)
    parts = np.empty((2, n), np.int8)

    found = 0
    nodes = 0
    exhausted = 0
    depth = 0
    start[0] = 0
    while depth >= 0:
        e = start[depth]
        if depth == q:
            # leaf: test the carved graph
            nodes += 1
            if node_budget >= 0 and nodes > node_budget:
                exhausted = 1
                break
            for i in range(n):
                cand[i] = masks0[i]
            for i in range(q):
                u = edge_u[chosen[i]]
                v = edge_v[chosen[i]]
                cand[u] &= ~(1 << v)
                cand[v] &= ~(1 << u)
            ok = True
            for i in range(n):
                if _popcount(cand[i]) < 2:
                    ok = False
                    break
            if ok:
                # connectivity over bitmasks
                seen = 1
                stack_top = 0
                bfs = np.empty(n, np.int64)
                bfs[0] = 0
                stack_top = 1
                while stack_top > 0:
                    stack_top -= 1
                    u = bfs[stack_top]
                    mu = cand[u]
                    while mu:
                        low = mu & (-mu)
                        mu ^= low
                        v = 0
                        t = low
                        while t > 1:
                            t >>= 1
                            v += 1
                        if not (seen >> v) & 1:
                            seen |= 1 << v
                            bfs[stack_top] = v
                            stack_top += 1
                ok = seen == (1 << n) - 1
            if ok:
                nfound, _ = enumerate_partitions(cand, n, fixed, 0, 2, parts)
                if nfound == 1:
                    three_classes = False
                    for i in range(n):
                        if parts[0, i] == 2:
                            three_classes = True
                            break
                    if three_classes and count_colorings(cand, n, 2) == 0:
                        if found < cap:
                            for i in range(q):
                                out_subsets[found, i] = chosen[i]
                            found += 1
            depth -= 1
            if depth >= 0:
                start[depth] = chosen[depth] + 1
            continue
        # descend: pick the next edge at this depth
        advanced = False
        while e < m - (q - depth - 1):
            if independent == 0 or not (forbidden[depth] >> e) & 1:
                chosen[depth] = e
                forbidden[depth + 1] = forbidden[depth] | conflict_masks[e]
                start[depth + 1] = e + 1
                depth += 1
                advanced = True
                break
            e += 1
        if not advanced:
            depth -= 1
            if depth >= 0:
                start[depth] = chosen[depth] + 1
    return found, nodes, exhausted

"""Canonical vertex ordering via refinement and branch-and-bound.

The search individualizes vertices out of the first non-singleton cell of
an equitable ordered partition, refines, and keeps the leaf whose
relabeled adjacency matrix is lexicographically smallest. Automorphisms
discovered from equal-code leaves prune sibling branches (orbits under
the stabilizer of the individualized prefix), which tames stars, unions
of equal components and other high-symmetry inputs.

Everything runs on flat int64 arrays so the same source compiles under
numba and runs unmodified in the pure path.
"""

from __future__ import annotations

import numpy as np

from . import jit

_AUTO_CAP = 256


@jit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@jit
def _refine(masks, n, order, cstart, keys):
    """Equitable refinement to fixpoint, stable within cells.

    Cells split by neighbor count toward every cell, subcells ordered by
    ascending count; repeats until no cell splits.
    """
    changed = True
    while changed:
        changed = False
        s = 0
        while s < n:
            e = s + 1
            while e < n and cstart[e] == s:
                e += 1
            wmask = 0
            for p in range(s, e):
                wmask |= 1 << order[p]
            x = 0
            while x < n:
                xe = x + 1
                while xe < n and cstart[xe] == x:
                    xe += 1
                if xe - x > 1:
                    same = True
                    k0 = _popcount(masks[order[x]] & wmask)
                    keys[x] = k0
                    for p in range(x + 1, xe):
                        kk = _popcount(masks[order[p]] & wmask)
                        keys[p] = kk
                        if kk != k0:
                            same = False
                    if not same:
                        # stable insertion sort of order[x:xe] by key
                        for i in range(x + 1, xe):
                            kv = keys[i]
                            ov = order[i]
                            j = i - 1
                            while j >= x and keys[j] > kv:
                                keys[j + 1] = keys[j]
                                order[j + 1] = order[j]
                                j -= 1
                            keys[j + 1] = kv
                            order[j + 1] = ov
                        run = x
                        for p in range(x, xe):
                            if p > x and keys[p] != keys[p - 1]:
                                run = p
                            cstart[p] = run
                        changed = True
                x = xe
            s = e


@jit
def _first_nonsingleton(n, cstart):
    p = 0
    while p < n:
        if p + 1 < n and cstart[p + 1] == p:
            return p
        p += 1
    return -1


@jit
def _cell_end(n, cstart, s):
    e = s + 1
    while e < n and cstart[e] == s:
        e += 1
    return e


@jit
def _individualize(n, order, cstart, v):
    """Move v to the front of its cell as a singleton."""
    pos = 0
    while order[pos] != v:
        pos += 1
    s = cstart[pos]
    e = _cell_end(n, cstart, s)
    for p in range(pos, s, -1):
        order[p] = order[p - 1]
    order[s] = v
    cstart[s] = s
    for p in range(s + 1, e):
        cstart[p] = s + 1


@jit
def _leaf_rows(masks, n, order, rows):
    for i in range(n):
        mi = masks[order[i]]
        r = 0
        for j in range(n):
            if (mi >> order[j]) & 1:
                r |= 1 << j
        rows[i] = r


@jit
def _uf_find(uf, x):
    r = x
    while uf[r] != r:
        r = uf[r]
    while uf[x] != r:
        nxt = uf[x]
        uf[x] = r
        x = nxt
    return r


@jit
def canonical_order(masks, n):
    """Return perm int64[n]: perm[i] is the vertex at canonical position i."""
    perm = np.empty(n, np.int64)
    if n <= 1:
        for i in range(n):
            perm[i] = i
        return perm

    order = np.empty(n, np.int64)
    cstart = np.zeros(n, np.int64)
    keys = np.empty(n, np.int64)
    for i in range(n):
        order[i] = i
    _refine(masks, n, order, cstart, keys)

    best_rows = np.zeros(n, np.int64)
    cur_rows = np.zeros(n, np.int64)
    have_best = False

    autos = np.empty((_AUTO_CAP, n), np.int64)
    auto_cnt = 0
    uf = np.empty(n, np.int64)

    # DFS frames
    ford = np.empty((n + 1, n), np.int64)
    fcst = np.empty((n + 1, n), np.int64)
    fcand = np.empty((n + 1, n), np.int64)
    fcand_cnt = np.zeros(n + 1, np.int64)
    fidx = np.zeros(n + 1, np.int64)
    fdone = np.empty((n + 1, n), np.int64)
    fdone_cnt = np.zeros(n + 1, np.int64)
    chosen = np.empty(n + 1, np.int64)

    s0 = _first_nonsingleton(n, cstart)
    if s0 < 0:
        _leaf_rows(masks, n, order, best_rows)
        for i in range(n):
            perm[i] = order[i]
        return perm

    sp = 0
    for i in range(n):
        ford[0, i] = order[i]
        fcst[0, i] = cstart[i]
    e0 = _cell_end(n, cstart, s0)
    fcand_cnt[0] = e0 - s0
    for i in range(s0, e0):
        fcand[0, i - s0] = order[i]
    fidx[0] = 0
    fdone_cnt[0] = 0

    while sp >= 0:
        if fidx[sp] >= fcand_cnt[sp]:
            sp -= 1
            continue
        v = fcand[sp, fidx[sp]]
        fidx[sp] += 1

        if fdone_cnt[sp] > 0 and auto_cnt > 0:
            # orbits under discovered automorphisms fixing the prefix
            for i in range(n):
                uf[i] = i
            any_auto = False
            for a in range(auto_cnt):
                ok = True
                for d in range(sp):
                    w = chosen[d]
                    if autos[a, w] != w:
                        ok = False
                        break
                if ok:
                    any_auto = True
                    for i in range(n):
                        ri = _uf_find(uf, i)
                        rj = _uf_find(uf, autos[a, i])
                        if ri != rj:
                            uf[ri] = rj
            if any_auto:
                rv = _uf_find(uf, v)
                skip = False
                for t in range(fdone_cnt[sp]):
                    if _uf_find(uf, fdone[sp, t]) == rv:
                        skip = True
                        break
                if skip:
                    continue

        fdone[sp, fdone_cnt[sp]] = v
        fdone_cnt[sp] += 1
        chosen[sp] = v

        for i in range(n):
            order[i] = ford[sp, i]
            cstart[i] = fcst[sp, i]
        _individualize(n, order, cstart, v)
        _refine(masks, n, order, cstart, keys)

        s = _first_nonsingleton(n, cstart)
        if s < 0:
            _leaf_rows(masks, n, order, cur_rows)
            if not have_best:
                have_best = True
                for i in range(n):
                    best_rows[i] = cur_rows[i]
                    perm[i] = order[i]
            else:
                cmp = 0
                for i in range(n):
                    if cur_rows[i] < best_rows[i]:
                        cmp = -1
                        break
                    if cur_rows[i] > best_rows[i]:
                        cmp = 1
                        break
                if cmp < 0:
                    for i in range(n):
                        best_rows[i] = cur_rows[i]
                        perm[i] = order[i]
                elif cmp == 0 and auto_cnt < _AUTO_CAP:
                    # order and perm induce the same code: an automorphism
                    for i in range(n):
                        autos[auto_cnt, order[i]] = perm[i]
                    auto_cnt += 1
            continue

        sp += 1
        for i in range(n):
            ford[sp, i] = order[i]
            fcst[sp, i] = cstart[i]
        e = _cell_end(n, cstart, s)
        fcand_cnt[sp] = e - s
        for i in range(s, e):
            fcand[sp, i - s] = order[i]
        fidx[sp] = 0
        fdone_cnt[sp] = 0

    return perm

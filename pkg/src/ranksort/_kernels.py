"""Compiled fast path for the set-intersection sorter.

Mirrors the BlockBitset-based reference implementation block for block:
same sweep order, same live-range bookkeeping, same block_ops and
rank_updates accounting.  The test suite asserts that both engines
produce identical ranks and counters.

All bit manipulation sticks to explicit uint64 constants; mixing uint64
with signed literals would promote to float64 under numba's numpy-style
typing rules.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_U0 = np.uint64(0)
_U1 = np.uint64(1)
_UFULL = np.uint64(0xFFFFFFFFFFFFFFFF)
_U32 = np.uint64(32)
_U16 = np.uint64(16)
_U8 = np.uint64(8)
_U4 = np.uint64(4)
_U2 = np.uint64(2)
_M32 = np.uint64(0xFFFFFFFF)
_M16 = np.uint64(0xFFFF)
_M8 = np.uint64(0xFF)
_M4 = np.uint64(0xF)
_M2 = np.uint64(0x3)
_M1 = np.uint64(0x1)


@njit(cache=True)
def _ctz64(x):
    c = 0
    if x & _M32 == _U0:
        c += 32
        x >>= _U32
    if x & _M16 == _U0:
        c += 16
        x >>= _U16
    if x & _M8 == _U0:
        c += 8
        x >>= _U8
    if x & _M4 == _U0:
        c += 4
        x >>= _U4
    if x & _M2 == _U0:
        c += 2
        x >>= _U2
    if x & _M1 == _U0:
        c += 1
    return c


@njit(cache=True)
def _set_full(buf, n, n_blocks):
    for w in range(n_blocks):
        buf[w] = _UFULL
    tail = n & 63
    if tail:
        buf[n_blocks - 1] = (_U1 << np.uint64(tail)) - _U1
    return 0, n_blocks - 1


@njit(cache=True)
def _remove(buf, lo, hi, i, n_blocks):
    w = i >> 6
    buf[w] &= ~(_U1 << np.uint64(i & 63))
    if buf[w] == _U0 and (w == lo or w == hi):
        while hi >= lo and buf[hi] == _U0:
            hi -= 1
        while hi >= lo and buf[lo] == _U0:
            lo += 1
        if lo > hi:
            lo, hi = n_blocks, -1
    return lo, hi


@njit(cache=True)
def _intersect_assign(dst, dlo, dhi, src, slo, shi, n_blocks):
    lo = dlo if dlo > slo else slo
    hi = dhi if dhi < shi else shi
    if lo > hi:
        for w in range(dlo, dhi + 1):
            dst[w] = _U0
        return n_blocks, -1, 0
    for w in range(dlo, lo):
        dst[w] = _U0
    for w in range(hi + 1, dhi + 1):
        dst[w] = _U0
    for w in range(lo, hi + 1):
        dst[w] &= src[w]
    visited = hi - lo + 1
    while hi >= lo and dst[hi] == _U0:
        hi -= 1
    while hi >= lo and dst[lo] == _U0:
        lo += 1
    if lo > hi:
        return n_blocks, -1, visited
    return lo, hi, visited


@njit(cache=True)
def _assign_intersection(dst, old_lo, old_hi, a, alo, ahi, b, blo, bhi, n_blocks):
    for w in range(old_lo, old_hi + 1):
        dst[w] = _U0
    lo = alo if alo > blo else blo
    hi = ahi if ahi < bhi else bhi
    if lo > hi:
        return n_blocks, -1, 0
    for w in range(lo, hi + 1):
        dst[w] = a[w] & b[w]
    visited = hi - lo + 1
    while hi >= lo and dst[hi] == _U0:
        hi -= 1
    while hi >= lo and dst[lo] == _U0:
        lo += 1
    if lo > hi:
        return n_blocks, -1, visited
    return lo, hi, visited


@njit(cache=True)
def _difference_assign(dst, dlo, dhi, src, slo, shi, n_blocks):
    lo = dlo if dlo > slo else slo
    hi = dhi if dhi < shi else shi
    if lo > hi:
        return dlo, dhi, 0
    for w in range(lo, hi + 1):
        dst[w] &= ~src[w]
    visited = hi - lo + 1
    lo, hi = dlo, dhi
    while hi >= lo and dst[hi] == _U0:
        hi -= 1
    while hi >= lo and dst[lo] == _U0:
        lo += 1
    if lo > hi:
        return n_blocks, -1, visited
    return lo, hi, visited


@njit(cache=True)
def rank_intersect_kernel(cols, n, n_blocks, ranks, counter_out):
    """Run the full sweep; cols holds the slot-space sort orders.

    ranks (pre-filled with 1) and counter_out ([block_ops,
    rank_updates]) are filled in place.
    """
    m = cols.shape[0]
    block_ops = 0
    rank_updates = 0

    B = np.zeros((n, n_blocks), np.uint64)
    B_lo = np.full(n, n_blocks, np.int64)
    B_hi = np.full(n, -1, np.int64)
    work = np.empty(n_blocks, np.uint64)
    wl, wh = _set_full(work, n, n_blocks)

    if m > 1:
        # successor sets w.r.t. the lexicographic objective: sweep order
        # equals slot order, so each set is a contiguous suffix
        for t in range(n):
            wl, wh = _remove(work, wl, wh, t, n_blocks)
            if wl <= wh:
                for w in range(wl, wh + 1):
                    B[t, w] = work[w]
            B_lo[t] = wl
            B_hi[t] = wh
        for k in range(1, m - 1):
            wl, wh = _set_full(work, n, n_blocks)
            for idx in range(n):
                t = cols[k, idx]
                wl, wh = _remove(work, wl, wh, t, n_blocks)
                if B_lo[t] <= B_hi[t]:
                    lo, hi, visited = _intersect_assign(
                        B[t], B_lo[t], B_hi[t], work, wl, wh, n_blocks
                    )
                    B_lo[t] = lo
                    B_hi[t] = hi
                    block_ops += visited
        wl, wh = _set_full(work, n, n_blocks)

    n_sets = 1
    cap = 4
    rank_blocks = np.zeros((cap, n_blocks), np.uint64)
    rs_lo = np.full(cap, n_blocks, np.int64)
    rs_hi = np.full(cap, -1, np.int64)
    rs_lo[0], rs_hi[0] = _set_full(rank_blocks[0], n, n_blocks)
    scratch = np.zeros(n_blocks, np.uint64)
    sc_lo, sc_hi = n_blocks, -1

    last = cols[m - 1]
    for idx in range(n):
        t = last[idx]
        wl, wh = _remove(work, wl, wh, t, n_blocks)
        if m == 1:
            # lexicographic sweep doubles as the last-objective pass
            if wl <= wh:
                for w in range(wl, wh + 1):
                    B[t, w] = work[w]
            B_lo[t] = wl
            B_hi[t] = wh
        elif B_lo[t] <= B_hi[t]:
            lo, hi, visited = _intersect_assign(
                B[t], B_lo[t], B_hi[t], work, wl, wh, n_blocks
            )
            B_lo[t] = lo
            B_hi[t] = hi
            block_ops += visited
        r = ranks[t]
        sc_lo, sc_hi, visited = _assign_intersection(
            scratch, sc_lo, sc_hi,
            B[t], B_lo[t], B_hi[t],
            rank_blocks[r - 1], rs_lo[r - 1], rs_hi[r - 1],
            n_blocks,
        )
        block_ops += visited
        if sc_lo <= sc_hi:
            if n_sets == r:
                if n_sets == cap:
                    new_cap = cap * 2
                    new_blocks = np.zeros((new_cap, n_blocks), np.uint64)
                    new_lo = np.full(new_cap, n_blocks, np.int64)
                    new_hi = np.full(new_cap, -1, np.int64)
                    new_blocks[:cap] = rank_blocks
                    new_lo[:cap] = rs_lo
                    new_hi[:cap] = rs_hi
                    rank_blocks = new_blocks
                    rs_lo = new_lo
                    rs_hi = new_hi
                    cap = new_cap
                n_sets += 1
            lo, hi, visited = _difference_assign(
                rank_blocks[r - 1], rs_lo[r - 1], rs_hi[r - 1],
                scratch, sc_lo, sc_hi, n_blocks,
            )
            rs_lo[r - 1] = lo
            rs_hi[r - 1] = hi
            block_ops += visited
            target = rank_blocks[r]
            for w in range(sc_lo, sc_hi + 1):
                word = scratch[w]
                if word != _U0:
                    target[w] |= word
                    base = w << 6
                    while word != _U0:
                        ranks[base + _ctz64(word)] = r + 1
                        rank_updates += 1
                        word &= word - _U1
            if rs_lo[r] > rs_hi[r]:
                rs_lo[r], rs_hi[r] = sc_lo, sc_hi
            else:
                if sc_lo < rs_lo[r]:
                    rs_lo[r] = sc_lo
                if sc_hi > rs_hi[r]:
                    rs_hi[r] = sc_hi

    counter_out[0] += block_ops
    counter_out[1] += rank_updates

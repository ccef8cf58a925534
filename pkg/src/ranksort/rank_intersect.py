"""O(N^2)-space non-dominated sorting via bit-parallel set intersection.

Per-solution successor sets are stored as block bitsets over *slot*
indices (positions in the lexicographic sort order), which keeps the
first successor sets contiguous and gives the live-range short-circuit
the most traction.  The ranking pass never touches objective values:
after the sorting step the algorithm works purely on bitsets, so it
performs zero per-pair dominance comparisons.
"""

from __future__ import annotations

import numpy as np

from .bitset import BlockBitset
from .core import (
    Counters,
    DuplicateRowsError,
    MemoryCapError,
    ObjectiveMatrix,
    build_permutations,
    has_duplicate_rows,
)

DEFAULT_MEM_CAP_BYTES = 2 * 1024**3

__all__ = ["DEFAULT_MEM_CAP_BYTES", "rank_intersect_sort"]


def _check_rank_sets(rank_sets: list[BlockBitset], ranks: np.ndarray) -> None:
    """Debug sweep: rank sets must partition the slots and agree with ranks."""
    total = 0
    for r, bs in enumerate(rank_sets, start=1):
        members = bs.ones()
        total += members.size
        if not (ranks[members] == r).all():
            raise AssertionError(f"rank set {r} disagrees with the working rank array")
    if total != ranks.size:
        raise AssertionError("rank sets do not partition the population")


def rank_intersect_sort(
    obj: ObjectiveMatrix,
    counters: Counters | None = None,
    mem_cap_bytes: int = DEFAULT_MEM_CAP_BYTES,
    check_invariants: bool = False,
    engine: str = "kernel",
) -> np.ndarray:
    """Compute 1-based domination ranks for a duplicate-free matrix.

    Functionally equivalent to ``rank_ordinal_sort`` but trades O(N^2)
    bitset storage for word-at-a-time rank updates.  Raises
    ``MemoryCapError`` when the N * ceil(N/64) block allocation would
    exceed ``mem_cap_bytes``.

    ``engine`` selects between the numba-compiled fast path ("kernel")
    and the BlockBitset reference path ("bitset").  Both produce
    identical ranks and counters; ``check_invariants`` implies the
    reference path.
    """
    if counters is None:
        counters = Counters()
    if engine not in ("kernel", "bitset"):
        raise ValueError(f"unknown engine {engine!r}")
    if has_duplicate_rows(obj):
        raise DuplicateRowsError("input contains equal rows; deduplicate first")
    n, m = obj.n, obj.m
    n_blocks = (n + 63) // 64
    if n * n_blocks * 8 > mem_cap_bytes:
        raise MemoryCapError(
            f"dominance sets need {n * n_blocks * 8} bytes, cap is {mem_cap_bytes}"
        )

    perm = build_permutations(obj)
    p1 = perm[:, 0]
    # relabel solutions by lexicographic position ("slot"); bitsets hold slots
    slot_of = np.empty(n, dtype=np.int64)
    slot_of[p1] = np.arange(n, dtype=np.int64)

    if engine == "kernel" and not check_invariants:
        from ._kernels import rank_intersect_kernel

        cols = np.ascontiguousarray(slot_of[perm].T)
        rank = np.ones(n, dtype=np.int64)
        counter_out = np.zeros(2, dtype=np.int64)
        rank_intersect_kernel(cols, n, n_blocks, rank, counter_out)
        counters.block_ops += int(counter_out[0])
        counters.rank_updates += int(counter_out[1])
        out = np.empty(n, dtype=np.int64)
        out[p1] = rank
        return out

    rank = np.ones(n, dtype=np.int64)  # indexed by slot
    rank_sets = [BlockBitset.full(n)]
    scratch = BlockBitset.empty(n)
    work = BlockBitset.full(n)

    if m == 1:
        # the lexicographic sweep doubles as the last-objective pass
        last = np.arange(n, dtype=np.int64)
        successors = None
    else:
        successors: list[BlockBitset | None] = [None] * n
        # init: successor sets w.r.t. objective 0 (sweep order is slot order)
        for t in range(n):
            work.remove(t)
            successors[t] = work.copy()
        # middle objectives: accumulate intersections
        for k in range(1, m - 1):
            col = slot_of[perm[:, k]]
            work.set_full()
            for t in col:
                work.remove(t)
                succ = successors[t]
                if succ.live_lo <= succ.live_hi:
                    succ.intersect_assign(work, counters)
        last = slot_of[perm[:, m - 1]]
        work.set_full()

    rank_updates = 0
    for t in last:
        t = int(t)
        work.remove(t)
        if successors is None:
            dom = work.copy()
        else:
            dom = successors[t]
            if dom.live_lo <= dom.live_hi:
                dom.intersect_assign(work, counters)
        r = int(rank[t])
        scratch.assign_intersection(dom, rank_sets[r - 1], counters)
        if not scratch.is_empty():
            moved = scratch.ones()
            if len(rank_sets) == r:
                rank_sets.append(BlockBitset.empty(n))
            rank_sets[r - 1].difference_assign(scratch, counters)
            rank_sets[r].insert_many(moved)
            rank[moved] = r + 1
            rank_updates += moved.size
        if check_invariants:
            _check_rank_sets(rank_sets, rank)

    counters.rank_updates += int(rank_updates)
    out = np.empty(n, dtype=np.int64)
    out[p1] = rank
    return out

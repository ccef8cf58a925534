"""Reference sorters: the classical pairwise oracle and ENS variants.

``naive_fast_nds`` is the correctness oracle for every other algorithm
in the package: it derives fronts purely from pairwise dominance
outcomes (Deb-style domination counts) and accepts duplicate rows,
which are mutually non-dominated by definition.
"""

from __future__ import annotations

import numpy as np

from .core import (
    DuplicateRowsError,
    ObjectiveMatrix,
    build_permutations,
    has_duplicate_rows,
)

__all__ = ["ens_bs", "ens_ss", "naive_fast_nds"]

# broadcasting work is chunked to keep temporaries below ~tens of MB
_CHUNK_ELEMS = 2_000_000


def _dominates_block(rows: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Boolean (len(rows), len(others)) matrix: rows[i] dominates others[j]."""
    le = rows[:, None, :] <= others[None, :, :]
    lt = rows[:, None, :] < others[None, :, :]
    return le.all(axis=2) & lt.any(axis=2)


def _chunked_domination(rows: np.ndarray, others: np.ndarray):
    """Yield (start, dominates_block) over row chunks of manageable size."""
    if len(others) == 0 or len(rows) == 0:
        return
    chunk = max(1, _CHUNK_ELEMS // (others.shape[0] * others.shape[1]))
    for start in range(0, len(rows), chunk):
        yield start, _dominates_block(rows[start : start + chunk], others)


def naive_fast_nds(obj: ObjectiveMatrix) -> np.ndarray:
    """Classical O(MN^2) fast non-dominated sort (domination counts).

    Duplicates are permitted: equal vectors never dominate each other.
    Returns 1-based ranks.
    """
    values = obj.values
    n = obj.n
    dominated_count = np.zeros(n, dtype=np.int64)
    for _, dom in _chunked_domination(values, values):
        dominated_count += dom.sum(axis=0)

    ranks = np.zeros(n, dtype=np.int64)
    active = np.ones(n, dtype=bool)
    current_rank = 1
    while active.any():
        front = active & (dominated_count == 0)
        ranks[front] = current_rank
        active &= ~front
        remaining = np.flatnonzero(active)
        if remaining.size:
            members = values[front]
            rest = values[remaining]
            for _, dom in _chunked_domination(members, rest):
                dominated_count[remaining] -= dom.sum(axis=0)
        current_rank += 1
    return ranks


def _ens(obj: ObjectiveMatrix, binary: bool) -> np.ndarray:
    if has_duplicate_rows(obj):
        raise DuplicateRowsError("ENS requires a duplicate-free input; deduplicate first")
    values = obj.values
    n = obj.n
    order = build_permutations(obj)[:, 0]  # lexicographic insertion order
    n_fronts = 0
    ranks = np.empty(n, dtype=np.int64)
    # already-inserted members in insertion order, with their front index
    member_values = np.empty_like(values)
    member_front = np.empty(n, dtype=np.int64)

    def dominated_by_front(f: int, filled: int, candidate: np.ndarray) -> bool:
        # rows are pairwise distinct, so component-wise <= implies dominance
        in_front = member_front[:filled] == f
        return bool((member_values[:filled][in_front] <= candidate).all(axis=1).any())

    for filled, i in enumerate(order):
        candidate = values[i]
        if binary:
            lo, hi = 0, n_fronts  # hi == n_fronts means "new front"
            while lo < hi:
                mid = (lo + hi) // 2
                if dominated_by_front(mid, filled, candidate):
                    lo = mid + 1
                else:
                    hi = mid
            target = lo
        else:
            # one vectorized pass equivalent to the sequential front scan:
            # dominating fronts form a prefix (transitivity), so the first
            # front holding no dominating member is the scan's stop point
            dom = (member_values[:filled] <= candidate).all(axis=1)
            counts = np.bincount(member_front[:filled][dom], minlength=n_fronts)
            zeros = np.flatnonzero(counts == 0)
            target = int(zeros[0]) if zeros.size else n_fronts
        if target == n_fronts:
            n_fronts += 1
        member_values[filled] = candidate
        member_front[filled] = target
        ranks[i] = target + 1
    return ranks


def ens_ss(obj: ObjectiveMatrix) -> np.ndarray:
    """Efficient non-dominated sort, sequential front search."""
    return _ens(obj, binary=False)


def ens_bs(obj: ObjectiveMatrix) -> np.ndarray:
    """Efficient non-dominated sort, binary front search."""
    return _ens(obj, binary=True)

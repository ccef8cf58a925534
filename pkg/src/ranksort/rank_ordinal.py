"""O(N)-space non-dominated sorting via ordinal rank comparison.

Solutions are visited in lexicographic order (first permutation column);
for each solution only its smallest objective-wise successor set is
scanned, and a full M-wide ordinal-rank comparison is attempted only
against successors that currently share the solution's rank.  A
successful comparison increments the successor's rank by one.
"""

from __future__ import annotations

import numpy as np

from .core import (
    Counters,
    DuplicateRowsError,
    ObjectiveMatrix,
    build_ordinal_ranks,
    build_permutations,
    has_duplicate_rows,
)

__all__ = ["rank_ordinal_sort"]


def rank_ordinal_sort(
    obj: ObjectiveMatrix,
    counters: Counters | None = None,
    visit_log: list | None = None,
) -> np.ndarray:
    """Compute 1-based domination ranks for a duplicate-free matrix.

    Parameters
    ----------
    obj : ObjectiveMatrix
        Input objectives; rows must be pairwise distinct (run
        ``deduplicate`` first).
    counters : Counters, optional
        Instrumentation sink for inner_iterations / full_comparisons /
        rank_updates.
    visit_log : list, optional
        Diagnostic: appends ``(i, rank_at_visit)`` for every outer-loop
        visit, in visit order.

    Returns
    -------
    np.ndarray of int64, shape (N,)
        ranks[i] = domination rank of solution i (1-based).
    """
    if counters is None:
        counters = Counters()
    if has_duplicate_rows(obj):
        raise DuplicateRowsError("input contains equal rows; deduplicate first")
    n, m = obj.n, obj.m
    perm = build_permutations(obj)
    ordinal = build_ordinal_ranks(perm)

    rank = np.ones(n, dtype=np.int64)
    inner_iterations = 0
    full_comparisons = 0
    rank_updates = 0

    for i in perm[:, 0]:
        row = ordinal[i]
        # objective with the fewest successors (largest ordinal rank);
        # np.argmax returns the smallest index on ties
        k = int(np.argmax(row))
        if visit_log is not None:
            visit_log.append((int(i), int(rank[i])))
        successors = perm[row[k] + 1 :, k]
        inner_iterations += successors.size
        if successors.size == 0:
            continue
        rank_i = rank[i]
        candidates = successors[rank[successors] == rank_i]
        full_comparisons += candidates.size
        if candidates.size == 0:
            continue
        dominated = candidates[(row < ordinal[candidates]).all(axis=1)]
        if dominated.size:
            rank[dominated] = rank_i + 1
            rank_updates += dominated.size

    counters.inner_iterations += inner_iterations
    counters.full_comparisons += full_comparisons
    counters.rank_updates += int(rank_updates)
    return rank

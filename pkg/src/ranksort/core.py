"""Core types, dominance predicates and stable-sort preprocessing.

All algorithms in this package operate on an :class:`ObjectiveMatrix`
(N solutions x M objectives, minimization) and share the same
preprocessing: objective-wise stable sorts producing a permutation
matrix P and its per-column inverse, the ordinal rank matrix R.

Indices are 0-based throughout the library; ranks are 1-based (rank 1 is
the non-dominated front).  The CLI converts solution indices to 1-based
numbering on output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

__all__ = [
    "ConsistencyError",
    "Counters",
    "Dominance",
    "DuplicateMap",
    "DuplicateRowsError",
    "MemoryCapError",
    "ObjectiveMatrix",
    "build_ordinal_ranks",
    "build_permutations",
    "compare_dominance",
    "deduplicate",
    "fronts_from_ranks",
    "has_duplicate_rows",
    "load_matrix",
    "parse_matrix_text",
    "reinsert_duplicates",
]


class ConsistencyError(ValueError):
    """Internally inconsistent inputs (size mismatch, gapped ranks)."""


class DuplicateRowsError(ValueError):
    """Input contains equal objective vectors where none are allowed."""


class MemoryCapError(ValueError):
    """An algorithm's working-set allocation would exceed the memory cap."""


class Dominance(Enum):
    A_DOMINATES_B = "a-dominates-b"
    B_DOMINATES_A = "b-dominates-a"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


@dataclass(frozen=True)
class ObjectiveMatrix:
    """N x M grid of finite objective values, minimization convention."""

    values: np.ndarray

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ValueError(f"expected a 2-D matrix, got ndim={values.ndim}")
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise ValueError(f"need at least one solution and one objective, got shape {values.shape}")
        if not np.isfinite(values).all():
            raise ValueError("objective values must be finite (no NaN/inf)")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_rows(cls, rows) -> "ObjectiveMatrix":
        return cls(np.asarray(rows, dtype=np.float64))


@dataclass(frozen=True)
class DuplicateMap:
    """Maps each original row to its first-occurrence representative."""

    representative: np.ndarray  # original index -> index of first equal row
    unique_indices: np.ndarray  # representatives in first-occurrence order


@dataclass
class Counters:
    """Instrumentation record for complexity verification.

    inner_iterations counts every visited successor position (including
    skipped ones), full_comparisons only complete M-wide ordinal-rank
    comparisons, rank_updates unit rank increments, and block_ops 64-bit
    block visits in bitset logical operations.
    """

    inner_iterations: int = 0
    full_comparisons: int = 0
    rank_updates: int = 0
    block_ops: int = 0


def compare_dominance(a, b) -> Dominance:
    """Pareto-compare two objective vectors (minimization).

    Weak dominance: a dominates b iff a <= b component-wise and a != b.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1 or a.size < 1:
        raise ValueError(f"incompatible vector shapes {a.shape} vs {b.shape}")
    a_le = bool((a <= b).all())
    b_le = bool((b <= a).all())
    if a_le and b_le:
        return Dominance.EQUAL
    if a_le:
        return Dominance.A_DOMINATES_B
    if b_le:
        return Dominance.B_DOMINATES_A
    return Dominance.INCOMPARABLE


def build_permutations(obj: ObjectiveMatrix) -> np.ndarray:
    """Stable objective-wise sort orders as an (N, M) index matrix.

    Column 0 sorts lexicographically over objectives (0, 1, ..., M-1)
    with input order as the final tiebreak; columns 1..M-1 are stable
    single-key sorts on their objective.  Stability is load-bearing:
    the ordinal-rank dominance inference is only sound with stable sorts.
    """
    values = obj.values
    n, m = values.shape
    perm = np.empty((n, m), dtype=np.int64)
    # np.lexsort: last key is primary; stable, so input order breaks remaining ties
    perm[:, 0] = np.lexsort(tuple(values[:, k] for k in reversed(range(m))))
    for k in range(1, m):
        perm[:, k] = np.argsort(values[:, k], kind="stable")
    return perm


def build_ordinal_ranks(perm: np.ndarray) -> np.ndarray:
    """Per-column inverse of a permutation matrix: R[P[i, k], k] = i."""
    perm = np.asarray(perm, dtype=np.int64)
    n, m = perm.shape
    ranks = np.empty((n, m), dtype=np.int64)
    rows = np.arange(n, dtype=np.int64)
    for k in range(m):
        ranks[perm[:, k], k] = rows
    return ranks


def has_duplicate_rows(obj: ObjectiveMatrix) -> bool:
    seen = set()
    for row in obj.values:
        key = row.tobytes()
        if key in seen:
            return True
        seen.add(key)
    return False


def deduplicate(obj: ObjectiveMatrix) -> tuple[ObjectiveMatrix, DuplicateMap]:
    """Collapse exactly-equal rows, keeping first occurrences in order.

    Equality is exact bitwise equality of the stored float64 values;
    epsilon semantics are deliberately out of scope.
    """
    first: dict[bytes, int] = {}
    representative = np.empty(obj.n, dtype=np.int64)
    unique_indices = []
    for i, row in enumerate(obj.values):
        key = row.tobytes()
        rep = first.setdefault(key, i)
        representative[i] = rep
        if rep == i:
            unique_indices.append(i)
    unique_indices = np.asarray(unique_indices, dtype=np.int64)
    unique = ObjectiveMatrix(obj.values[unique_indices])
    return unique, DuplicateMap(representative=representative, unique_indices=unique_indices)


def reinsert_duplicates(unique_ranks: np.ndarray, dmap: DuplicateMap) -> np.ndarray:
    """Expand ranks of unique rows back to the original row count."""
    unique_ranks = np.asarray(unique_ranks, dtype=np.int64)
    if unique_ranks.shape != dmap.unique_indices.shape:
        raise ConsistencyError(
            f"rank count {unique_ranks.shape[0]} does not match unique count {dmap.unique_indices.shape[0]}"
        )
    n = dmap.representative.shape[0]
    rep_position = np.full(n, -1, dtype=np.int64)
    rep_position[dmap.unique_indices] = np.arange(unique_ranks.shape[0])
    return unique_ranks[rep_position[dmap.representative]]


def fronts_from_ranks(ranks: np.ndarray) -> list[np.ndarray]:
    """Group solution indices by rank; fronts[r] holds all rank r+1 solutions."""
    ranks = np.asarray(ranks, dtype=np.int64)
    max_rank = int(ranks.max())
    if int(ranks.min()) != 1:
        raise ConsistencyError("minimum rank must be 1")
    fronts = [np.flatnonzero(ranks == r) for r in range(1, max_rank + 1)]
    for r, front in enumerate(fronts):
        if front.size == 0:
            raise ConsistencyError(f"rank range has a gap at rank {r + 1}")
    return fronts


def parse_matrix_text(text: str) -> ObjectiveMatrix:
    """Parse the plain-text format: one solution per line, M decimal
    values separated by whitespace and/or commas."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.replace(",", " ").split()
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ValueError("no data rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("inconsistent number of values per line")
    return ObjectiveMatrix.from_rows(rows)


def load_matrix(path) -> ObjectiveMatrix:
    return parse_matrix_text(Path(path).read_text())

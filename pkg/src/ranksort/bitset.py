"""Fixed-capacity bitset over 64-bit blocks with live-range tracking.

Bit b of block w represents index 64*w + b.  Each bitset remembers the
first and last possibly-nonzero block (the *live range*); block-wise
operations only visit the overlap of the operands' live ranges, which is
what lets intersections short-circuit when the sets cannot overlap.

``counters.block_ops`` is incremented by the number of 64-bit blocks
visited in logical operations (copies and scans do not count).
"""

from __future__ import annotations

import numpy as np

from .core import Counters

BLOCK_BITS = 64

__all__ = ["BLOCK_BITS", "BlockBitset"]

_SET_MASK = np.left_shift(np.uint64(1), np.arange(BLOCK_BITS, dtype=np.uint64))
_CLEAR_MASK = ~_SET_MASK


class BlockBitset:
    """Mutable fixed-capacity set of integers in [0, capacity)."""

    __slots__ = ("capacity", "n_blocks", "blocks", "live_lo", "live_hi")

    def __init__(self, capacity: int, _blocks: np.ndarray | None = None):
        if capacity < 1:
            raise ValueError(f"invalid capacity {capacity}")
        self.capacity = capacity
        self.n_blocks = (capacity + BLOCK_BITS - 1) // BLOCK_BITS
        if _blocks is None:
            self.blocks = np.zeros(self.n_blocks, dtype=np.uint64)
        else:
            self.blocks = _blocks
        # live_lo > live_hi encodes an empty live range
        self.live_lo = self.n_blocks
        self.live_hi = -1

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls, capacity: int) -> "BlockBitset":
        return cls(capacity)

    @classmethod
    def full(cls, capacity: int) -> "BlockBitset":
        bs = cls(capacity)
        bs.set_full()
        return bs

    def copy(self) -> "BlockBitset":
        dup = BlockBitset(self.capacity, _blocks=self.blocks.copy())
        dup.live_lo = self.live_lo
        dup.live_hi = self.live_hi
        return dup

    def set_full(self) -> None:
        """Reset to the full set {0, ..., capacity-1}."""
        self.blocks[:] = np.uint64(0xFFFFFFFFFFFFFFFF)
        tail = self.capacity % BLOCK_BITS
        if tail:
            self.blocks[-1] = np.uint64((1 << tail) - 1)
        self.live_lo = 0
        self.live_hi = self.n_blocks - 1

    # -- queries ------------------------------------------------------

    def is_empty(self) -> bool:
        # all mutations keep the live-range edge blocks nonzero
        return self.live_lo > self.live_hi

    def popcount(self) -> int:
        if self.live_lo > self.live_hi:
            return 0
        return int(np.bitwise_count(self.blocks[self.live_lo : self.live_hi + 1]).sum())

    def contains(self, i: int) -> bool:
        i = self._check_index(i)
        return bool((self.blocks[i >> 6] >> np.uint64(i & 63)) & np.uint64(1))

    def ones(self) -> np.ndarray:
        """All member indices, strictly ascending."""
        if self.live_lo > self.live_hi:
            return np.empty(0, dtype=np.int64)
        words = self.blocks[self.live_lo : self.live_hi + 1]
        out = []
        for w_off in np.flatnonzero(words):
            word = int(words[w_off])
            base = (self.live_lo + int(w_off)) * BLOCK_BITS
            while word:
                low = word & -word
                out.append(base + low.bit_length() - 1)
                word ^= low
        return np.asarray(out, dtype=np.int64)

    def iter_ones(self):
        return iter(self.ones())

    # -- single-bit mutation ------------------------------------------

    def insert(self, i: int) -> None:
        i = self._check_index(i)
        w = i >> 6
        self.blocks[w] |= _SET_MASK[i & 63]
        if self.live_lo > self.live_hi:
            self.live_lo = self.live_hi = w
        else:
            if w < self.live_lo:
                self.live_lo = w
            if w > self.live_hi:
                self.live_hi = w

    def remove(self, i: int) -> None:
        i = self._check_index(i)
        w = i >> 6
        blocks = self.blocks
        blocks[w] &= _CLEAR_MASK[i & 63]
        if not blocks[w] and (w == self.live_lo or w == self.live_hi):
            self._shrink_edges()

    def insert_many(self, indices: np.ndarray) -> None:
        if len(indices) == 0:
            return
        indices = np.asarray(indices, dtype=np.int64)
        if indices.min() < 0 or indices.max() >= self.capacity:
            raise IndexError("index out of range")
        words = indices >> 6
        masks = np.left_shift(np.uint64(1), (indices & 63).astype(np.uint64))
        np.bitwise_or.at(self.blocks, words, masks)
        lo, hi = int(words.min()), int(words.max())
        if self.live_lo > self.live_hi:
            self.live_lo, self.live_hi = lo, hi
        else:
            self.live_lo = min(self.live_lo, lo)
            self.live_hi = max(self.live_hi, hi)

    # -- block-wise logical operations --------------------------------

    def intersect_assign(self, src: "BlockBitset", counters: Counters | None = None) -> None:
        """In-place intersection: self = self & src.

        Only the overlap of the two live ranges is visited; blocks of
        self outside src's live range are zeroed without being counted
        as logical block operations.  Live bounds are re-tightened by
        scanning the overlap.
        """
        self._check_capacity(src)
        lo = max(self.live_lo, src.live_lo)
        hi = min(self.live_hi, src.live_hi)
        if lo > hi:
            # disjoint live ranges: result is empty, zero blocks visited
            if self.live_lo <= self.live_hi:
                self.blocks[self.live_lo : self.live_hi + 1] = 0
            self.live_lo, self.live_hi = self.n_blocks, -1
            return
        if self.live_lo < lo:
            self.blocks[self.live_lo : lo] = 0
        if hi < self.live_hi:
            self.blocks[hi + 1 : self.live_hi + 1] = 0
        self.blocks[lo : hi + 1] &= src.blocks[lo : hi + 1]
        if counters is not None:
            counters.block_ops += hi - lo + 1
        self._retighten(lo, hi)

    def assign_intersection(self, a: "BlockBitset", b: "BlockBitset", counters: Counters | None = None) -> None:
        """Overwrite self with a & b (self is scratch storage)."""
        self._check_capacity(a)
        a._check_capacity(b)
        if self.live_lo <= self.live_hi:
            self.blocks[self.live_lo : self.live_hi + 1] = 0
        lo = max(a.live_lo, b.live_lo)
        hi = min(a.live_hi, b.live_hi)
        if lo > hi:
            self.live_lo, self.live_hi = self.n_blocks, -1
            return
        np.bitwise_and(a.blocks[lo : hi + 1], b.blocks[lo : hi + 1], out=self.blocks[lo : hi + 1])
        if counters is not None:
            counters.block_ops += hi - lo + 1
        self._retighten(lo, hi)

    def difference_assign(self, src: "BlockBitset", counters: Counters | None = None) -> None:
        """In-place difference: self = self \\ src."""
        self._check_capacity(src)
        lo = max(self.live_lo, src.live_lo)
        hi = min(self.live_hi, src.live_hi)
        if lo > hi:
            return
        self.blocks[lo : hi + 1] &= ~src.blocks[lo : hi + 1]
        if counters is not None:
            counters.block_ops += hi - lo + 1
        self._retighten(self.live_lo, self.live_hi)

    # -- internals ----------------------------------------------------

    def _check_index(self, i: int) -> int:
        i = int(i)  # shifts must run on Python ints, not int64
        if not 0 <= i < self.capacity:
            raise IndexError(f"index {i} out of range for capacity {self.capacity}")
        return i

    def _check_capacity(self, other: "BlockBitset") -> None:
        if self.capacity != other.capacity:
            raise ValueError(f"capacity mismatch: {self.capacity} vs {other.capacity}")

    def _retighten(self, lo: int, hi: int) -> None:
        """Set live bounds to the first/last nonzero block inside [lo, hi].

        One backward scan and one forward scan from the edges; in the
        common case the edge blocks are nonzero and this is O(1).
        """
        blocks = self.blocks
        while hi >= lo and not blocks[hi]:
            hi -= 1
        while hi >= lo and not blocks[lo]:
            lo += 1
        if lo > hi:
            lo, hi = self.n_blocks, -1
        self.live_lo, self.live_hi = lo, hi

    def _shrink_edges(self) -> None:
        lo, hi = self.live_lo, self.live_hi
        while lo <= hi and not self.blocks[hi]:
            hi -= 1
        while lo <= hi and not self.blocks[lo]:
            lo += 1
        if lo > hi:
            lo, hi = self.n_blocks, -1
        self.live_lo, self.live_hi = lo, hi

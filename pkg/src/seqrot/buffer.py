"""Element buffers and exact operation counters.

Every rotation algorithm in this package works on an :class:`ElementBuffer`
and tallies its element traffic in a :class:`Counters` instance.  The
counters are the single source of truth for how buffer accesses are
accounted: all algorithms route reads, writes, swaps, and block moves
through the methods defined here, so the accounting rules live in exactly
one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, MutableSequence


class ElementBuffer:
    """Fixed-length view over a mutable sequence of opaque elements.

    Wraps the given mutable sequence (``list``, ``bytearray``, ...) by
    reference, without copying.  Indexing is strict: valid indices are
    ``0 <= i < len(buf)`` and negative indices are rejected rather than
    wrapped.  The underlying sequence must not change length while an
    algorithm operates on the buffer.
    """

    __slots__ = ("_items",)

    def __init__(self, items: MutableSequence):
        if not hasattr(items, "__setitem__"):
            raise TypeError("ElementBuffer requires a mutable sequence")
        self._items = items

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, index: int):
        if not 0 <= index < len(self._items):
            raise IndexError(f"index {index} out of range [0, {len(self._items)})")
        return self._items[index]

    def __setitem__(self, index: int, value) -> None:
        if not 0 <= index < len(self._items):
            raise IndexError(f"index {index} out of range [0, {len(self._items)})")
        self._items[index] = value

    def __iter__(self) -> Iterator:
        return iter(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementBuffer):
            other = other._items
        try:
            return len(self._items) == len(other) and all(
                a == b for a, b in zip(self._items, other)
            )
        except TypeError:
            return NotImplemented

    def __repr__(self) -> str:
        return f"ElementBuffer({self._items!r})"

    def get_slice(self, low: int, high: int) -> list:
        """Copy of the elements in ``[low, high)``."""
        if not 0 <= low <= high <= len(self._items):
            raise IndexError(f"slice [{low}, {high}) out of range")
        return list(self._items[low:high])

    def set_slice(self, low: int, values) -> None:
        """Overwrite ``[low, low + len(values))`` in place; length preserved."""
        high = low + len(values)
        if not 0 <= low <= high <= len(self._items):
            raise IndexError(f"slice [{low}, {high}) out of range")
        self._items[low:high] = values

    def copy_within(self, src_low: int, src_high: int, dst_low: int) -> None:
        """Block-move ``[src_low, src_high)`` to ``dst_low``; ranges may overlap."""
        count = src_high - src_low
        if not (0 <= src_low <= src_high <= len(self._items)
                and 0 <= dst_low <= dst_low + count <= len(self._items)):
            raise IndexError("block move out of range")
        # RHS slice is materialized before assignment, so overlap is safe.
        self._items[dst_low:dst_low + count] = self._items[src_low:src_high]

    def snapshot(self) -> list:
        """Plain-list copy of the current contents."""
        return list(self._items)


@dataclass(slots=True)
class Counters:
    """Exact tallies of element traffic during one or more algorithm runs.

    reads / writes
        Element loads from / stores to the rotated buffer itself.  Traffic
        to auxiliary scratch storage is *not* counted here; it shows up in
        ``aux_peak`` instead.
    swaps
        In-buffer element-pair exchanges.  One swap performs 2 reads and
        2 writes, so ``swap()`` bumps all three tallies at once.
    aux_peak
        Peak number of auxiliary element slots held at any one time (the
        space-complexity witness: 1 for a swap temporary, d for a partial
        scratch block, n for a full scratch copy).
    depth_max
        Maximum recursion depth reached (0 for iterative algorithms).

    All fields only ever increase while an algorithm runs.
    """

    reads: int = 0
    writes: int = 0
    swaps: int = 0
    aux_peak: int = 0
    depth_max: int = 0

    def read(self, buf: ElementBuffer, index: int):
        self.reads += 1
        return buf._items[index]

    def write(self, buf: ElementBuffer, index: int, value) -> None:
        self.writes += 1
        buf._items[index] = value

    def swap(self, buf: ElementBuffer, i: int, j: int) -> None:
        # 1 swap = 2 reads + 2 writes through a one-element temporary.
        self.swaps += 1
        self.reads += 2
        self.writes += 2
        if self.aux_peak < 1:
            self.aux_peak = 1
        items = buf._items
        items[i], items[j] = items[j], items[i]

    def bulk_read(self, buf: ElementBuffer, low: int, high: int) -> list:
        """Block-read ``[low, high)``; counts one read per element."""
        self.reads += high - low
        return buf.get_slice(low, high)

    def bulk_write(self, buf: ElementBuffer, low: int, values) -> None:
        """Block-write at ``low``; counts one write per element."""
        self.writes += len(values)
        buf.set_slice(low, values)

    def bulk_move(self, buf: ElementBuffer, src_low: int, src_high: int,
                  dst_low: int) -> None:
        """In-place block move; one read and one write per element moved."""
        self.reads += src_high - src_low
        self.writes += src_high - src_low
        buf.copy_within(src_low, src_high, dst_low)

    def hold_aux(self, slots: int) -> None:
        """Record that ``slots`` auxiliary element slots are held at once."""
        if slots > self.aux_peak:
            self.aux_peak = slots

    def enter_depth(self, depth: int) -> None:
        """Record reaching recursion depth ``depth``."""
        if depth > self.depth_max:
            self.depth_max = depth

"""In-place rotation algorithms with exact operation accounting.

Left-rotating a buffer of length ``n`` by ``r`` moves the element at index
``k`` to index ``(k + n - r) mod n``.  Five algorithms compute it:

``rotate_copy``
    Walk the buffer into a full-size scratch array at rotated positions,
    then copy back.  Time Theta(n), scratch n elements.
``rotate_copy_native``
    Three block copies using scratch for only ``min(r, n - r)`` elements.
``rotate_reverse``
    Reverse the two halves, then reverse the whole buffer.  Constant space.
``rotate_swap_recursive`` / ``rotate_swap_iterative``
    Divide and conquer: swap equal-length end sections, recurse (or loop)
    on the remainder; the section lengths shrink like subtraction-gcd.
``rotate_modulo``
    Follow each permutation cycle, writing every element straight into its
    final position; exactly ``n`` buffer writes.

All algorithms mutate the buffer in place, require a normalized rotation
``0 <= r < n`` (``r == 0`` returns immediately without touching the
buffer), and tally their element traffic in a ``Counters``.

Each algorithm optionally reports its loop state through a *probe*
callback ``probe(site, phase, state)`` invoked at loop entry, after every
iteration, and at loop exit.  Probes exist for the invariant-checking and
iteration-counting machinery in :mod:`seqrot.verify`; production calls
leave ``probe=None`` and pay only a skipped branch per iteration.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Optional

from .buffer import Counters, ElementBuffer

Probe = Callable[[str, str, dict], None]

# Probe site names.
SITE_COPY = "copy.loop"
SITE_REVERSE = "reverse.loop"
SITE_SWAP_SECTIONS = "swap_sections.loop"
SITE_SWAP_ITER = "swap.loop"
SITE_SWAP_HELPER = "swap.helper"
SITE_MODULO_OUTER = "modulo.outer"
SITE_MODULO_INNER = "modulo.inner"

# Guard rails for the recursive variant: reject absurd lengths outright and
# keep the predicted recursion depth within what the interpreter stack
# tolerates (CPython segfaults well below 16k frames on an 8 MB stack).
SWAP_RECURSIVE_MAX_N = 2 ** 20
SWAP_RECURSIVE_MAX_DEPTH = 8000
_STACK_HEADROOM = 128


@dataclass(frozen=True)
class RotationRequest:
    """A raw rotation amount normalized to a canonical left rotation.

    ``amount`` is the requested shift (positive = left, negative = right,
    any magnitude); ``r_left`` is the equivalent left rotation in
    ``[0, n)``, or 0 for an empty buffer.
    """

    amount: int
    n: int
    r_left: int


def normalize(amount: int, n: int) -> RotationRequest:
    """Reduce any requested shift to a left rotation in ``[0, n)``.

    Right rotation by ``r`` equals left rotation by ``n - r``, and shifts
    wrap modulo ``n``, so every integer amount has a canonical form.  Total:
    accepts any ``amount`` and any ``n >= 0``.
    """
    if n < 0:
        raise ValueError(f"normalize: length must be nonnegative, got {n}")
    return RotationRequest(amount=amount, n=n, r_left=amount % n if n else 0)


def _checked_length(buf: ElementBuffer, r: int) -> int:
    """Validate ``0 <= r < n`` (or ``r == 0``) and return the length."""
    n = len(buf)
    if r < 0:
        raise ValueError(f"rotation must be nonnegative, got {r}")
    if r != 0 and r >= n:
        raise ValueError(f"rotation {r} out of range [0, {n})")
    return n


def reverse(buf: ElementBuffer, low: int, high: int, counters: Counters,
            probe: Optional[Probe] = None) -> None:
    """Reverse ``buf[low..high)`` in place by swapping opposite ends.

    Performs ``ceil((high - low) / 2)`` swaps; for an odd-length range the
    final iteration swaps the central element with itself, which keeps the
    loop uniform at the cost of one redundant swap.
    """
    n = len(buf)
    if not 0 <= low <= high <= n:
        raise IndexError(f"reverse: range [{low}, {high}) invalid for length {n}")
    p, q = low, high - 1
    if probe:
        probe(SITE_REVERSE, "enter", {"low": low, "high": high, "p": p, "q": q})
    while p < q + 1:
        counters.swap(buf, p, q)
        p, q = p + 1, q - 1
        if probe:
            probe(SITE_REVERSE, "iter", {"low": low, "high": high, "p": p, "q": q})
    if probe:
        probe(SITE_REVERSE, "exit", {"low": low, "high": high, "p": p, "q": q})


def swap_sections(buf: ElementBuffer, low: int, high: int, d: int,
                  counters: Counters, probe: Optional[Probe] = None) -> None:
    """Exchange the non-overlapping sections ``[low..low+d)`` and ``[high-d..high)``.

    Exactly ``d`` swaps; everything between and outside the sections is
    untouched.
    """
    n = len(buf)
    if d < 0 or not 0 <= low <= low + d <= high - d <= high <= n:
        raise IndexError(
            f"swap_sections: sections d={d} in [{low}, {high}) invalid or overlapping"
        )
    x, z = low, high - d
    if probe:
        probe(SITE_SWAP_SECTIONS, "enter",
              {"low": low, "high": high, "d": d, "x": x, "z": z})
    while x != low + d:
        counters.swap(buf, x, z)
        x, z = x + 1, z + 1
        if probe:
            probe(SITE_SWAP_SECTIONS, "iter",
                  {"low": low, "high": high, "d": d, "x": x, "z": z})
    if probe:
        probe(SITE_SWAP_SECTIONS, "exit",
              {"low": low, "high": high, "d": d, "x": x, "z": z})


def rotate_copy(buf: ElementBuffer, r: int, counters: Counters,
                probe: Optional[Probe] = None) -> None:
    """Rotate left by ``r`` through a full-size scratch array.

    Source index ``s`` walks the buffer while destination ``d`` walks the
    scratch starting at ``n - r`` and wrapping at ``n``; the scratch is then
    copied back.  Buffer traffic: n reads, n writes; scratch held: n slots.
    """
    n = _checked_length(buf, r)
    if r == 0 or n <= 1:
        return
    scratch: list = [None] * n
    counters.hold_aux(n)
    s, d = 0, n - r
    if probe:
        probe(SITE_COPY, "enter", {"s": s, "d": d, "scratch": scratch})
    while s < n:
        scratch[d] = counters.read(buf, s)
        s, d = s + 1, d + 1
        if d == n:  # wrap over the buffer's bounds
            d = 0
        if probe:
            probe(SITE_COPY, "iter", {"s": s, "d": d, "scratch": scratch})
    if probe:
        probe(SITE_COPY, "exit", {"s": s, "d": d, "scratch": scratch})
    counters.bulk_write(buf, 0, scratch)


def rotate_copy_native(buf: ElementBuffer, r: int, counters: Counters,
                       probe: Optional[Probe] = None) -> None:
    """Rotate left by ``r`` with three block copies and minimal scratch.

    Saves the smaller side (``d = min(r, n - r)`` elements), block-moves the
    larger side into place, and restores the saved block.  Block moves use
    the platform's slice assignment but still count one read and one write
    per element, so counter identities do not depend on the backend.
    """
    n = _checked_length(buf, r)
    if r == 0 or n <= 1:
        return
    if probe:
        probe("copy_native", "enter", {})
    if r <= n - r:
        scratch = counters.bulk_read(buf, 0, r)       # save left block
        counters.hold_aux(r)
        counters.bulk_move(buf, r, n, 0)              # slide the rest left by r
        counters.bulk_write(buf, n - r, scratch)      # restore at the far end
    else:
        # Mirrored: save the right block of n - r elements, shift the left
        # block right by n - r, restore the saved block at the front.
        scratch = counters.bulk_read(buf, r, n)
        counters.hold_aux(n - r)
        counters.bulk_move(buf, 0, r, n - r)
        counters.bulk_write(buf, 0, scratch)
    if probe:
        probe("copy_native", "exit", {})


def rotate_reverse(buf: ElementBuffer, r: int, counters: Counters,
                   probe: Optional[Probe] = None) -> None:
    """Rotate left by ``r`` through three in-place reversals.

    Reversing ``[0..r)``, then ``[r..n)``, then the whole buffer realizes
    the rotation because reversal maps a concatenation to the reversed
    concatenation of reversed parts.  Swap total:
    ``ceil(r/2) + ceil((n-r)/2) + ceil(n/2)``.
    """
    n = _checked_length(buf, r)
    if r == 0 or n <= 1:
        return
    reverse(buf, 0, r, counters, probe)
    reverse(buf, r, n, counters, probe)
    reverse(buf, 0, n, counters, probe)


def swap_recursion_depth(r: int, n: int) -> int:
    """Recursion depth ``rotate_swap_recursive`` needs for this instance.

    The helper performs one subtraction-gcd step per call on the pair
    ``(r, n - r)``, so the depth equals the number of subtraction steps
    until the sides become equal (worst case ``n - 1`` for ``r = 1``).
    """
    if r == 0 or n <= 1:
        return 0
    a, b = r, n - r
    depth = 1
    while a != b:
        if a < b:
            b -= a
        else:
            a -= b
        depth += 1
    return depth


def rotate_swap_recursive(buf: ElementBuffer, r: int, counters: Counters,
                          probe: Optional[Probe] = None) -> None:
    """Rotate left by ``r`` by recursively swapping equal-length sections.

    Each helper call swaps the smaller of ``[low..p)`` / ``[p..high)`` with
    an equal-length block at the other end of the slice, putting that block
    into its final position, then recurses on what remains; equal lengths
    terminate with a single section swap.  Swap total is
    ``n - gcd(r, n - r)``; recursion depth is recorded in
    ``counters.depth_max``.

    Lengths above ``SWAP_RECURSIVE_MAX_N`` and instances whose predicted
    depth exceeds ``SWAP_RECURSIVE_MAX_DEPTH`` are rejected (use
    ``rotate_swap_iterative`` for those).
    """
    n = _checked_length(buf, r)
    if r == 0 or n <= 1:
        return
    if n > SWAP_RECURSIVE_MAX_N:
        raise ValueError(
            f"rotate_swap_recursive: length {n} exceeds the depth guard "
            f"({SWAP_RECURSIVE_MAX_N}); use rotate_swap_iterative"
        )
    depth = swap_recursion_depth(r, n)
    if depth > SWAP_RECURSIVE_MAX_DEPTH:
        raise ValueError(
            f"rotate_swap_recursive: predicted recursion depth {depth} exceeds "
            f"the depth guard ({SWAP_RECURSIVE_MAX_DEPTH}); use rotate_swap_iterative"
        )
    limit = sys.getrecursionlimit()
    needed = depth + _stack_depth() + _STACK_HEADROOM
    if needed > limit:
        sys.setrecursionlimit(needed)
    try:
        _swap_helper(buf, 0, r, n, counters, probe, 1)
    finally:
        if needed > limit:
            sys.setrecursionlimit(limit)


def _stack_depth() -> int:
    """Current interpreter stack depth, for recursion-limit accounting."""
    depth = 0
    frame = sys._getframe()
    while frame is not None:
        depth += 1
        frame = frame.f_back
    return depth


def _swap_helper(buf: ElementBuffer, low: int, p: int, high: int,
                 counters: Counters, probe: Optional[Probe], depth: int) -> None:
    """Rotate ``buf[low..high)`` at ``p``: swap ``[low..p)`` and ``[p..high)``."""
    counters.enter_depth(depth)
    if probe:
        probe(SITE_SWAP_HELPER, "enter",
              {"low": low, "p": p, "high": high, "depth": depth})
    if low < p < high:
        if p - low == high - p:
            swap_sections(buf, low, high, p - low, counters, probe)
            if probe:
                probe(SITE_SWAP_HELPER, "iter",
                      {"low": low, "p": p, "high": high, "d": p - low,
                       "case": "equal"})
        elif p - low < high - p:
            # Left side is smaller: its swap partner sits at the far right.
            swap_sections(buf, low, high, p - low, counters, probe)
            if probe:
                probe(SITE_SWAP_HELPER, "iter",
                      {"low": low, "p": p, "high": high, "d": p - low,
                       "case": "left"})
            _swap_helper(buf, low, p, high - (p - low), counters, probe,
                         depth + 1)
        else:
            # Right side is smaller: its swap partner sits at the far left.
            swap_sections(buf, low, high, high - p, counters, probe)
            if probe:
                probe(SITE_SWAP_HELPER, "iter",
                      {"low": low, "p": p, "high": high, "d": high - p,
                       "case": "right"})
            _swap_helper(buf, low + (high - p), p, high, counters, probe,
                         depth + 1)
    if probe:
        probe(SITE_SWAP_HELPER, "exit",
              {"low": low, "p": p, "high": high, "depth": depth})


def rotate_swap_iterative(buf: ElementBuffer, r: int, counters: Counters,
                          probe: Optional[Probe] = None) -> None:
    """Rotate left by ``r`` by iteratively swapping equal-length sections.

    Same section-swapping strategy and swap count as the recursive version,
    with ``low`` and ``high`` closing in on the pivot instead of recursing;
    constant space, ``depth_max`` stays 0.
    """
    n = _checked_length(buf, r)
    if r == 0 or n <= 1:
        return
    low, p, high = 0, r, n
    if probe:
        probe(SITE_SWAP_ITER, "enter", {"low": low, "p": p, "high": high})
    while low < p < high:
        if p - low == high - p:
            swap_sections(buf, low, high, p - low, counters, probe)
            low, high = p, p
        elif p - low < high - p:
            swap_sections(buf, low, high, p - low, counters, probe)
            high = high - (p - low)
        else:
            swap_sections(buf, low, high, high - p, counters, probe)
            low = low + (high - p)
        if probe:
            probe(SITE_SWAP_ITER, "iter", {"low": low, "p": p, "high": high})
    if probe:
        probe(SITE_SWAP_ITER, "exit", {"low": low, "p": p, "high": high})


def rotate_modulo(buf: ElementBuffer, r: int, counters: Counters,
                  probe: Optional[Probe] = None) -> None:
    """Rotate left by ``r`` by walking the permutation cycles.

    The index permutation splits into ``gcd(n, n - r)`` cycles of equal
    length; the outer loop visits one cycle per iteration and the inner
    do-while carries a single displaced element around the cycle, dropping
    every element directly into its final slot.  Exactly ``n`` buffer
    writes, ``n + gcd(n, n - r)`` reads, one auxiliary slot.
    """
    n = _checked_length(buf, r)
    if r == 0 or n <= 1:
        return
    start, moved = 0, 0
    if probe:
        probe(SITE_MODULO_OUTER, "enter", {"start": start, "moved": moved})
    while moved != n:
        displaced = counters.read(buf, start)
        counters.hold_aux(1)
        v = start
        while True:  # do-while: the body always runs at least once
            v += n - r
            if v >= n:  # wrap over the buffer's bounds
                v -= n
            grabbed = counters.read(buf, v)
            counters.write(buf, v, displaced)
            displaced = grabbed
            moved += 1
            if probe:
                probe(SITE_MODULO_INNER, "iter",
                      {"start": start, "moved": moved, "v": v,
                       "displaced": displaced})
            if v == start:
                break
        if probe:
            probe(SITE_MODULO_INNER, "exit",
                  {"start": start, "moved": moved, "v": v,
                   "displaced": displaced})
        start += 1
        if probe:
            probe(SITE_MODULO_OUTER, "iter", {"start": start, "moved": moved})
    if probe:
        probe(SITE_MODULO_OUTER, "exit", {"start": start, "moved": moved})


#: Canonical algorithm names, as accepted by the CLI and the bench harness.
ALGORITHMS: dict[str, Callable] = {
    "copy": rotate_copy,
    "copy-native": rotate_copy_native,
    "reverse": rotate_reverse,
    "swap": rotate_swap_iterative,
    "swap-rec": rotate_swap_recursive,
    "modulo": rotate_modulo,
}

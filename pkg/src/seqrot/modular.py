"""Number-theoretic kernel for rotation index arithmetic.

A left rotation of ``n`` elements by ``r`` permutes the index set
``[0, n)``; the permutation decomposes into ``g = gcd(n, n - r)`` disjoint
cycles of length ``tau = n / g``, where each cycle advances by the step
``m = n - r`` modulo ``n``.  This module provides the wrap (subtraction
modulo) primitive, gcd by successive subtraction, Bezout coefficients,
the cycle length, the cycle index map ``mp`` and its inverse, and the
forward and inverse index mappings of the rotation itself.

All functions are pure and hold no shared state, so they are safe to call
concurrently.  Python integers are unbounded, so products such as ``k * m``
never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def wrap(x: int, y: int) -> int:
    """``x`` reduced modulo ``y`` by repeated subtraction.

    Defined for ``x >= 0`` and ``y > 0`` only; the result always lies in
    ``[0, y)``.  The loop runs ``x // y`` times, so callers should keep
    ``x`` within a few multiples of ``y`` on hot paths.
    """
    if y <= 0:
        raise ValueError(f"wrap: modulus must be positive, got {y}")
    if x < 0:
        raise ValueError(f"wrap: argument must be nonnegative, got {x}")
    while x >= y:
        x -= y
    return x


def gcd_sub(x: int, y: int) -> int:
    """Greatest common divisor by successive subtraction.

    Both arguments must be positive.  Cost is linear in ``(x + y) / gcd``,
    which is exorbitant for extreme ratios; this is the deliberately
    elementary form, kept as the kernel's reference gcd.
    """
    if x <= 0 or y <= 0:
        raise ValueError(f"gcd_sub: arguments must be positive, got ({x}, {y})")
    while x != y:
        if x > y:
            x -= y
        else:
            y -= x
    return x


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Extended Euclidean algorithm.

    Returns ``(g, a, b)`` with ``a*x + b*y == g == gcd(x, y)`` (Bezout's
    identity) for positive ``x`` and ``y``.
    """
    if x <= 0 or y <= 0:
        raise ValueError(f"ext_gcd: arguments must be positive, got ({x}, {y})")
    old_r, r = x, y
    old_a, a = 1, 0
    old_b, b = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_a, a = a, old_a - q * a
        old_b, b = b, old_b - q * b
    return old_r, old_a, old_b


def tau(n: int, m: int) -> int:
    """Cycle length ``n / gcd(n, m)`` of the step-``m`` permutation on [0, n).

    Requires ``0 < m <= n``; ``m == n`` yields 1 (the step is a full turn).
    """
    if n <= 0 or m <= 0 or m > n:
        raise ValueError(f"tau: need 0 < m <= n, got (n={n}, m={m})")
    return n // gcd_sub(n, m)


def mp(n: int, m: int, s: int, k: int) -> int:
    """The ``k``-th index on the cycle of step ``m`` starting at ``s``.

    Satisfies the recurrence ``mp(n, m, s, 0) == s`` and
    ``mp(n, m, s, k) == wrap(mp(n, m, s, k - 1) + m, n)``, and equals the
    closed form ``(s + k*m) mod n``.
    """
    if not 0 < m < n:
        raise ValueError(f"mp: need 0 < m < n, got (n={n}, m={m})")
    if not 0 <= s < n:
        raise ValueError(f"mp: start {s} out of range [0, {n})")
    if k < 0:
        raise ValueError(f"mp: step count must be nonnegative, got {k}")
    return (s + k * m) % n


def invert_mp(n: int, m: int, k: int, cross_check: bool = True) -> tuple[int, int]:
    """Locate index ``k`` inside the cycle family of step ``m`` modulo ``n``.

    Returns ``(s, i)`` with ``0 <= s < gcd(n, m)``, ``0 <= i < tau(n, m)``
    and ``mp(n, m, s, i) == k``.  The start is ``s = k mod gcd(n, m)``; the
    position ``i`` solves ``i * (m/g) = (k - s)/g  (mod n/g)`` via the
    Bezout coefficient of ``m/g``, which is the unique solution because
    ``m/g`` and ``n/g`` are coprime.

    The Bezout arithmetic is easy to get wrong, so when ``cross_check`` is
    enabled (and the interpreter runs with assertions on) results for
    ``n <= 4096`` are validated against a linear scan of the cycle.
    """
    if not 0 < m < n:
        raise ValueError(f"invert_mp: need 0 < m < n, got (n={n}, m={m})")
    if not 0 <= k < n:
        raise ValueError(f"invert_mp: index {k} out of range [0, {n})")
    g = gcd_sub(n, m)
    n_red = n // g
    s = k % g
    _, a, _ = ext_gcd(m // g, n_red)
    i = (a * ((k - s) // g)) % n_red
    if (s + i * m) % n != k:
        raise ArithmeticError(
            f"invert_mp: construction failed for (n={n}, m={m}, k={k})"
        )
    if __debug__ and cross_check and n <= 4096:
        scanned = next(j for j in range(n_red) if (s + j * m) % n == k)
        assert scanned == i, (n, m, k, s, i, scanned)
    return s, i


def dest_index(k: int, n: int, r: int) -> int:
    """Where the element at ``k`` lands after a left rotation by ``r``."""
    _check_index_args(k, n, r)
    return wrap(k + n - r, n)


def src_index(k: int, n: int, r: int) -> int:
    """Which original index supplies position ``k`` of a left rotation by ``r``."""
    _check_index_args(k, n, r)
    return wrap(k + r, n)


def _check_index_args(k: int, n: int, r: int) -> None:
    if n <= 0:
        raise ValueError(f"sequence length must be positive, got {n}")
    if not 0 <= k < n:
        raise ValueError(f"index {k} out of range [0, {n})")
    if not 0 <= r < n:
        raise ValueError(f"rotation {r} out of range [0, {n})")


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycle structure of the permutation induced by a left rotation.

    For length ``n`` and rotation ``r`` the permutation advances indices by
    ``step = n - r``; it splits into ``g = gcd(n, step)`` cycles of length
    ``tau``, one starting at each index in ``[0, g)``.
    """

    n: int
    step: int
    g: int
    tau: int
    starts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.g * self.tau != self.n:
            raise ValueError(
                f"inconsistent decomposition: {self.g} * {self.tau} != {self.n}"
            )
        if self.starts != tuple(range(self.g)):
            raise ValueError("cycle starts must be [0, g)")

    def cycle(self, s: int) -> list[int]:
        """The full cycle starting at ``s``, closed back to ``s``."""
        if not 0 <= s < self.g:
            raise ValueError(f"cycle start {s} out of range [0, {self.g})")
        return [mp(self.n, self.step, s, k) for k in range(self.tau)] + [s]

    def cycles(self) -> list[list[int]]:
        """All ``g`` cycles, each closed back to its start."""
        return [self.cycle(s) for s in self.starts]


def decompose(n: int, r: int) -> CycleDecomposition:
    """Cycle decomposition of the left rotation of ``n`` elements by ``r``.

    Requires ``0 < r < n``; other rotation amounts must be normalized by the
    caller first.
    """
    if n <= 0:
        raise ValueError(f"decompose: length must be positive, got {n}")
    if not 0 < r < n:
        raise ValueError(f"decompose: need 0 < r < n, got (n={n}, r={r})")
    step = n - r
    g = gcd_sub(n, step)
    return CycleDecomposition(
        n=n, step=step, g=g, tau=n // g, starts=tuple(range(g))
    )

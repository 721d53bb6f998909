"""Reference oracle, brute-force lemma checkers, and invariant-checked runs.

Three layers of runtime verification for the rotation algorithms:

* :func:`oracle_rotate` computes a rotation by literal slice concatenation,
  independently of the in-place algorithms, and serves as the reference
  result everywhere.
* The ``check_*`` functions enumerate bounded domains and falsify (or fail
  to falsify) the identities the algorithms rely on: wrap bounds, the
  pointwise index mappings, reversal of a concatenation, the rotation/swap
  decomposition (both directions), and the invertibility of the cycle
  index map.  Each returns a :class:`LemmaReport` with counted cases and
  concrete failure witnesses.
* :func:`run_checked` executes one algorithm with every registered loop
  invariant evaluated at loop entry, after every iteration, and at exit,
  against a snapshot of the initial buffer; the first violated predicate
  is returned as an :class:`InvariantViolation`.

Invariant predicates are registered data: each carries a stable identifier
(``Eq.9`` ... ``Eq.37``), a description, and an evaluation closure, so a
violation names exactly one predicate.  All checkers are pure given their
inputs and own their buffer copies, so they are safe to run in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .algorithms import (
    ALGORITHMS,
    SITE_COPY,
    SITE_MODULO_INNER,
    SITE_MODULO_OUTER,
    SITE_REVERSE,
    SITE_SWAP_HELPER,
    SITE_SWAP_ITER,
    SITE_SWAP_SECTIONS,
    normalize,
)
from .buffer import Counters, ElementBuffer
from .modular import dest_index, invert_mp, mp, src_index, wrap

#: Largest buffer run_checked accepts by default; invariant evaluation is
#: O(n) per iteration, so checked runs cost O(n^2).
CHECK_LIMIT_DEFAULT = 256

LEMMA_IDS = (
    "rev_cat",
    "rot_swap_left",
    "rot_swap_right",
    "invert_mp",
    "rot_pointwise",
    "wrap_bounds",
)


def oracle_rotate(seq: Sequence, amount: int) -> list:
    """Rotation by literal slice concatenation; the reference result.

    Positive amounts rotate left, negative right.  Amounts of magnitude
    ``>= len(seq)`` are first reduced via :func:`normalize` (the two-case
    concatenation itself is only defined for ``|amount| < n``).  Returns a
    fresh list; the input is never modified.
    """
    items = list(seq)
    n = len(items)
    if n == 0:
        return items
    if not -n < amount < n:
        amount = normalize(amount, n).r_left
    if amount >= 0:
        return items[amount:] + items[:amount]
    return items[n + amount:] + items[:n + amount]


@dataclass
class LemmaReport:
    """Outcome of one brute-force lemma check over a bounded domain.

    ``failures`` holds ``(witness, expected, actual)`` triples; an empty
    list means the identity held on every enumerated case.
    """

    lemma_id: str
    domain_bound: int
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_line(self) -> str:
        line = (f"lemma={self.lemma_id} bound={self.domain_bound} "
                f"cases={self.cases} failures={len(self.failures)}")
        if self.failures:
            witness, expected, actual = self.failures[0]
            line += f" first={witness!r} expected={expected!r} actual={actual!r}"
        return line


def _rev(seq: list) -> list:
    """Elementwise reversal: position k holds the old element n-1-k."""
    n = len(seq)
    return [seq[n - 1 - k] for k in range(n)]


def _cat(s: list, t: list) -> list:
    """Elementwise concatenation by the two-case index definition."""
    ls = len(s)
    return [s[k] if k < ls else t[k - ls] for k in range(ls + len(t))]


def check_wrap_bounds(max_value: int = 512) -> LemmaReport:
    """Exhaustively confirm 0 <= wrap(x, y) < y and wrap(x, y) == x mod y."""
    report = LemmaReport("wrap_bounds", max_value)
    for y in range(1, max_value + 1):
        for x in range(max_value + 1):
            w = wrap(x, y)
            report.cases += 1
            if not (0 <= w < y and w == x % y):
                report.failures.append(((x, y), x % y, w))
    return report


def check_rot_pointwise(max_n: int = 64) -> LemmaReport:
    """Exhaustively confirm the elementwise source/destination index maps.

    For every length, rotation, and position: the rotated sequence reads
    its k-th element from ``src_index(k)`` of the original, and the
    original's k-th element lands at ``dest_index(k)`` of the rotation.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    report = LemmaReport("rot_pointwise", max_n)
    for n in range(1, max_n + 1):
        original = list(range(n))
        for r in range(n):
            rotated = oracle_rotate(original, r)
            for k in range(n):
                report.cases += 1
                via_src = original[src_index(k, n, r)]
                via_dest = rotated[dest_index(k, n, r)]
                if rotated[k] != via_src or original[k] != via_dest:
                    report.failures.append(
                        ((n, r, k), (rotated[k], original[k]), (via_src, via_dest))
                    )
    return report


def check_lemma_rev_cat(max_len: int = 8) -> LemmaReport:
    """Exhaustively confirm rev(S . T) == rev(T) . rev(S).

    Enumerates all length pairs up to ``max_len`` over canonical sequences
    with pairwise-distinct elements.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    report = LemmaReport("rev_cat", max_len)
    for ls in range(max_len + 1):
        for lt in range(max_len + 1):
            s = list(range(ls))
            t = list(range(ls, ls + lt))
            lhs = _rev(_cat(s, t))
            rhs = _cat(_rev(t), _rev(s))
            report.cases += 1
            if lhs != rhs:
                report.failures.append(((ls, lt), rhs, lhs))
    return report


def check_lemma_rot_swap(max_len: int = 9) -> tuple[LemmaReport, LemmaReport]:
    """Exhaustively confirm the two rotation/swap decomposition identities.

    For all splits X Y Z with len(X) == len(Z) == d >= 1 and total length
    N <= max_len:

    * left:  rot(X.Y.Z, d)     == rot(Z.Y, d) . X
    * right: rot(X.Y.Z, N - d) == Z . rot(Y.X, N - 2d)

    The left identity's inner rotation is undefined when Y is empty (the
    amount would equal the sequence length), so those instances are
    skipped rather than counted.  Returns one report per direction.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    left = LemmaReport("rot_swap_left", max_len)
    right = LemmaReport("rot_swap_right", max_len)
    for total in range(2, max_len + 1):
        for d in range(1, total // 2 + 1):
            mid = total - 2 * d
            x = list(range(d))
            y = list(range(d, d + mid))
            z = list(range(d + mid, total))
            whole = x + y + z
            if mid > 0:
                lhs = oracle_rotate(whole, d)
                rhs = oracle_rotate(z + y, d) + x
                left.cases += 1
                if lhs != rhs:
                    left.failures.append(((total, d, "left"), rhs, lhs))
            lhs = oracle_rotate(whole, total - d)
            rhs = z + oracle_rotate(y + x, total - 2 * d)
            right.cases += 1
            if lhs != rhs:
                right.failures.append(((total, d, "right"), rhs, lhs))
    return left, right


def check_lemma_invert_mp(max_n: int = 128) -> LemmaReport:
    """Exhaustively confirm that every index lies on exactly the cycle
    :func:`seqrot.modular.invert_mp` claims.

    For all lengths up to ``max_n``, rotations ``0 < r < n``, and indices
    ``k``: the returned ``(s, i)`` is in range (start below the gcd,
    position below the cycle length) and ``mp(n, n - r, s, i) == k``.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    report = LemmaReport("invert_mp", max_n)
    for n in range(2, max_n + 1):
        for r in range(1, n):
            m = n - r
            g = math.gcd(n, m)
            cycle_len = n // g
            for k in range(n):
                s, i = invert_mp(n, m, k, cross_check=False)
                report.cases += 1
                if not (0 <= s < g and 0 <= i < cycle_len
                        and mp(n, m, s, i) == k):
                    report.failures.append(((n, r, k), k, (s, i)))
    return report


@dataclass(frozen=True)
class InvariantViolation:
    """A registered invariant that failed during a checked run."""

    algorithm: str
    invariant_id: str
    iteration: int
    detail: str

    def __str__(self) -> str:
        return (f"{self.invariant_id} violated in {self.algorithm} "
                f"at iteration {self.iteration}: {self.detail}")


class _Violated(Exception):
    def __init__(self, violation: InvariantViolation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass
class _RunContext:
    """Run-level facts shared by all invariant predicates."""

    algorithm: str
    buf: ElementBuffer
    n: int
    r: int
    old: list        # buffer contents at operation entry
    expected: list   # oracle rotation of old by r
    g: int           # gcd(n, n - r); 0 when the run degenerates (r == 0)
    cycle_len: int   # n // g; 0 when degenerate


@dataclass
class _Frame:
    """One active probe site instance (a loop run or a helper call)."""

    site: str
    params: dict
    old: Optional[list]
    iterations: int = 0


# --- invariant predicates -------------------------------------------------
#
# Each predicate receives the run context, the site frame, and the live
# probe state, and returns a failure detail string or None.  Identifiers
# are stable labels; "old" always refers to the snapshot the predicate's
# scope was entered with (the whole operation, or the enclosing reverse /
# section-swap / helper call).

def _eq9(ctx, frame, st):
    if not 0 <= st["s"] <= ctx.n:
        return f"source index s={st['s']} outside [0, {ctx.n}]"
    return None


def _eq10(ctx, frame, st):
    want = (st["s"] + ctx.n - ctx.r) % ctx.n
    if st["d"] != want:
        return f"destination d={st['d']}, expected {want}"
    return None


def _eq11(ctx, frame, st):
    s = st["s"]
    scratch = st["scratch"]
    split = ctx.n - ctx.r
    unrot = scratch[split:] + scratch[:split]
    live = list(ctx.buf._items[:s])
    if live != unrot[:s]:
        return f"scratch does not mirror the first {s} source elements"
    return None


def _eq12(ctx, frame, st):
    low, high, p, q = st["low"], st["high"], st["p"], st["q"]
    if not low <= p <= q + 2 <= high + 1:
        return f"pointer bounds broken: low={low} p={p} q={q} high={high}"
    return None


def _eq13(ctx, frame, st):
    low, high, p, q = st["low"], st["high"], st["p"], st["q"]
    if q != high + low - 1 - p:
        return f"q={q}, expected {high + low - 1 - p}"
    return None


def _eq14(ctx, frame, st):
    low, high, p, q = st["low"], st["high"], st["p"], st["q"]
    old = frame.old
    items = ctx.buf._items
    for i in range(low, p):
        if old[i] != items[high + low - 1 - i]:
            return f"lower half not mirrored at i={i}"
    for i in range(q + 1, high):
        if old[i] != items[high + low - 1 - i]:
            return f"upper half not mirrored at i={i}"
    return None


def _eq15(ctx, frame, st):
    low, high, d, x, z = st["low"], st["high"], st["d"], st["x"], st["z"]
    if not (low <= x <= low + d and high - d <= z <= high):
        return f"section pointers out of range: x={x} z={z}"
    return None


def _eq16(ctx, frame, st):
    low, high, d, x, z = st["low"], st["high"], st["d"], st["x"], st["z"]
    if x - low != z - (high - d):
        return f"pointers out of lockstep: x={x} z={z}"
    return None


def _eq17(ctx, frame, st):
    low, high, d, x, z = st["low"], st["high"], st["d"], st["x"], st["z"]
    old = frame.old
    items = ctx.buf._items
    done = x - low
    checks = (
        (list(items[low:x]), old[high - d:high - d + done], "left swapped"),
        (list(items[x:high - d]), old[x:high - d], "middle unchanged"),
        (list(items[high - d:z]), old[low:low + done], "right swapped"),
        (list(items[z:high]), old[z:high], "right tail unchanged"),
    )
    for got, want, label in checks:
        if got != want:
            return f"section partition broken: {label}"
    return None


def _eq19(ctx, frame, st):
    low, p, high = st["low"], st["p"], st["high"]
    if not 0 <= low <= p <= high <= ctx.n:
        return f"slice bounds broken: low={low} p={p} high={high}"
    return None


def _eq20(ctx, frame, st):
    low, p, high = st["low"], st["p"], st["high"]
    if (low == p) != (p == high):
        return f"slice does not collapse symmetrically: low={low} p={p} high={high}"
    return None


def _eq21(ctx, frame, st):
    low = st["low"]
    if list(ctx.buf._items[:low]) != ctx.expected[:low]:
        return f"prefix [0, {low}) is not in rotated position"
    return None


def _eq22(ctx, frame, st):
    high = st["high"]
    if list(ctx.buf._items[high:]) != ctx.expected[high:]:
        return f"suffix [{high}, {ctx.n}) is not in rotated position"
    return None


def _eq23(ctx, frame, st):
    low, p, high = st["low"], st["p"], st["high"]
    if not p - low < high - low:
        return None  # degenerate slice; the claim is conditional
    mid = oracle_rotate(list(ctx.buf._items[low:high]), p - low)
    if mid != ctx.expected[low:high]:
        return f"mid slice [{low}, {high}) would not rotate into place at p={p}"
    return None


def _eq24(ctx, frame, st):
    low, p, high, d = st["low"], st["p"], st["high"], st["d"]
    old = frame.old
    items = ctx.buf._items
    if st["case"] == "right":
        want = old[p:high] + old[low + d:p] + old[low:low + d]
    else:  # "left" and "equal" share the same geometry
        want = old[high - d:high] + old[p:high - d] + old[low:p]
    if list(items[low:high]) != want:
        return f"post-swap slice [{low}, {high}) is not Z.Y.X of its old content"
    if list(items[:low]) != old[:low] or list(items[high:]) != old[high:]:
        return f"helper touched elements outside [{low}, {high})"
    return None


def _eq25(ctx, frame, st):
    if not 0 <= st["moved"] <= ctx.n:
        return f"moved={st['moved']} outside [0, {ctx.n}]"
    return None


def _eq26(ctx, frame, st):
    if not 0 <= st["start"] <= ctx.g:
        return f"start={st['start']} outside [0, {ctx.g}]"
    return None


def _eq27(ctx, frame, st):
    start = st["start"]
    if start >= ctx.g:
        return None  # no further cycle to visit
    m = ctx.n - ctx.r
    if (start + ctx.cycle_len * m) % ctx.n != start:
        return f"cycle at start={start} does not close after {ctx.cycle_len} steps"
    return None


def _eq28(ctx, frame, st):
    m = ctx.n - ctx.r
    if (ctx.cycle_len * m) % ctx.n != 0:
        return f"cycle length {ctx.cycle_len} does not solve t*{m} = 0 (mod {ctx.n})"
    return None


def _eq30(ctx, frame, st):
    start, moved = st["start"], st["moved"]
    if moved != start * ctx.cycle_len:
        return f"moved={moved}, expected start*cycle_len={start * ctx.cycle_len}"
    return None


def _eq32(ctx, frame, st):
    m = ctx.n - ctx.r
    items = ctx.buf._items
    for s in range(min(st["start"], ctx.g)):
        for i in range(ctx.cycle_len):
            pos = (s + i * m) % ctx.n
            if items[pos] != ctx.expected[pos]:
                return f"completed cycle {s} disturbed at index {pos}"
    return None


def _eq34(ctx, frame, st):
    start, moved, v = st["start"], st["moved"], st["v"]
    k = moved - start * ctx.cycle_len
    want = (start + k * (ctx.n - ctx.r)) % ctx.n
    if v != want:
        return f"v={v}, expected cycle position {want}"
    return None


def _eq35(ctx, frame, st):
    start, moved = st["start"], st["moved"]
    k = moved - start * ctx.cycle_len
    if not 0 < k <= ctx.cycle_len:
        return f"in-cycle progress {k} outside (0, {ctx.cycle_len}]"
    return None


def _eq36(ctx, frame, st):
    v = st["v"]
    if st["displaced"] != ctx.old[v]:
        return f"displaced element is not the original occupant of index {v}"
    return None


def _eq37(ctx, frame, st):
    start, moved = st["start"], st["moved"]
    m = ctx.n - ctx.r
    items = ctx.buf._items
    for j in range(1, moved - start * ctx.cycle_len + 1):
        pos = (start + j * m) % ctx.n
        if items[pos] != ctx.expected[pos]:
            return f"visited index {pos} of the current cycle not in place"
    return None


_ALL = ("enter", "iter", "exit")
_POST = ("iter", "exit")  # do-while sites: first check after one iteration


@dataclass(frozen=True)
class InvariantSpec:
    """A registered invariant predicate: stable id, prose, sites, closure."""

    invariant_id: str
    description: str
    sites: dict  # site name -> phases the predicate is evaluated at
    check: Callable[[_RunContext, _Frame, dict], Optional[str]]


INVARIANTS: tuple[InvariantSpec, ...] = (
    InvariantSpec("Eq.9", "copy: source index stays within [0, n]",
                  {SITE_COPY: _ALL}, _eq9),
    InvariantSpec("Eq.10", "copy: destination trails source by n - r, wrapped",
                  {SITE_COPY: _ALL}, _eq10),
    InvariantSpec("Eq.11", "copy: scratch mirrors every element copied so far",
                  {SITE_COPY: _ALL}, _eq11),
    InvariantSpec("Eq.12", "reverse: pointer bounds low <= p <= q+2 <= high+1",
                  {SITE_REVERSE: _ALL}, _eq12),
    InvariantSpec("Eq.13", "reverse: pointers mirror about the range center",
                  {SITE_REVERSE: _ALL}, _eq13),
    InvariantSpec("Eq.14", "reverse: both finished ends hold mirrored elements",
                  {SITE_REVERSE: _ALL}, _eq14),
    InvariantSpec("Eq.15", "swap_sections: section pointers within their sections",
                  {SITE_SWAP_SECTIONS: _ALL}, _eq15),
    InvariantSpec("Eq.16", "swap_sections: section pointers advance in lockstep",
                  {SITE_SWAP_SECTIONS: _ALL}, _eq16),
    InvariantSpec("Eq.17", "swap_sections: buffer splits into swapped/unchanged sections",
                  {SITE_SWAP_SECTIONS: _ALL}, _eq17),
    InvariantSpec("Eq.19", "swap: 0 <= low <= p <= high <= n",
                  {SITE_SWAP_ITER: _ALL, SITE_SWAP_HELPER: ("enter", "exit")},
                  _eq19),
    InvariantSpec("Eq.20", "swap: slice collapses onto the pivot from both sides",
                  {SITE_SWAP_ITER: _ALL}, _eq20),
    InvariantSpec("Eq.21", "swap: prefix below low is fully rotated",
                  {SITE_SWAP_ITER: _ALL}, _eq21),
    InvariantSpec("Eq.22", "swap: suffix above high is fully rotated",
                  {SITE_SWAP_ITER: _ALL}, _eq22),
    InvariantSpec("Eq.23", "swap: rotating the mid slice at the pivot finishes the job",
                  {SITE_SWAP_ITER: _ALL}, _eq23),
    InvariantSpec("Eq.24", "swap helper: a section swap leaves Z.Y.X and frames the rest",
                  {SITE_SWAP_HELPER: ("iter",)}, _eq24),
    InvariantSpec("Eq.25", "modulo: moved element count within [0, n]",
                  {SITE_MODULO_OUTER: _ALL}, _eq25),
    InvariantSpec("Eq.26", "modulo: cycle start within [0, gcd(n, n - r)]",
                  {SITE_MODULO_OUTER: _ALL}, _eq26),
    InvariantSpec("Eq.27", "modulo: the pending cycle closes after cycle_len steps",
                  {SITE_MODULO_OUTER: _ALL}, _eq27),
    InvariantSpec("Eq.28", "modulo: cycle_len solves t*(n - r) = 0 (mod n)",
                  {SITE_MODULO_OUTER: _ALL}, _eq28),
    InvariantSpec("Eq.30", "modulo: moved equals start * cycle_len at the outer head",
                  {SITE_MODULO_OUTER: _ALL}, _eq30),
    InvariantSpec("Eq.32", "modulo: every completed cycle is fully in place",
                  {SITE_MODULO_OUTER: _ALL, SITE_MODULO_INNER: _POST}, _eq32),
    InvariantSpec("Eq.34", "modulo: v is the current position along the cycle",
                  {SITE_MODULO_INNER: _POST}, _eq34),
    InvariantSpec("Eq.35", "modulo: in-cycle progress within (0, cycle_len]",
                  {SITE_MODULO_INNER: _POST}, _eq35),
    InvariantSpec("Eq.36", "modulo: displaced holds the original element at v",
                  {SITE_MODULO_INNER: _POST}, _eq36),
    InvariantSpec("Eq.37", "modulo: every visited index of this cycle is in place",
                  {SITE_MODULO_INNER: _POST}, _eq37),
    InvariantSpec("post", "final buffer equals the reference rotation", {},
                  lambda ctx, frame, st: None),
)

_BY_SITE: dict[str, list[InvariantSpec]] = {}
for _spec in INVARIANTS:
    for _site in _spec.sites:
        _BY_SITE.setdefault(_site, []).append(_spec)

# Sites whose invariants compare against their own entry snapshot rather
# than the whole operation's.
_SNAPSHOT_SITES = frozenset({SITE_REVERSE, SITE_SWAP_SECTIONS, SITE_SWAP_HELPER})


class _Checker:
    """Probe callback evaluating registered invariants during one run."""

    def __init__(self, ctx: _RunContext):
        self.ctx = ctx
        self.stacks: dict[str, list[_Frame]] = {}

    def __call__(self, site: str, phase: str, state: dict) -> None:
        stack = self.stacks.setdefault(site, [])
        if phase == "enter":
            old = self.ctx.buf.snapshot() if site in _SNAPSHOT_SITES else None
            stack.append(_Frame(site, dict(state), old))
        elif not stack:
            # do-while sites emit no "enter"; open their frame lazily
            old = self.ctx.buf.snapshot() if site in _SNAPSHOT_SITES else None
            stack.append(_Frame(site, dict(state), old))
        frame = stack[-1]
        if phase == "iter":
            frame.iterations += 1
        for spec in _BY_SITE.get(site, ()):
            if phase in spec.sites[site]:
                detail = spec.check(self.ctx, frame, state)
                if detail is not None:
                    raise _Violated(InvariantViolation(
                        self.ctx.algorithm, spec.invariant_id,
                        frame.iterations, detail))
        if phase == "exit":
            stack.pop()


def run_checked(algorithm: str, buf, r: int,
                check_limit: int = CHECK_LIMIT_DEFAULT,
                ) -> Optional[InvariantViolation]:
    """Run one algorithm with every registered invariant asserted.

    ``buf`` may be an :class:`ElementBuffer` or any sequence; the checked
    run operates on its own copy and never mutates the input.  Returns the
    first :class:`InvariantViolation` encountered (which signals a bug in
    the implementation), or None when the run completes with all
    invariants intact and the final buffer equal to the reference
    rotation.

    Buffers longer than ``check_limit`` are rejected: checking costs
    O(n) per loop iteration.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; "
                         f"choose from {sorted(ALGORITHMS)}")
    items = list(buf)
    n = len(items)
    if n > check_limit:
        raise ValueError(
            f"buffer of {n} elements exceeds the check limit {check_limit}"
        )
    work = ElementBuffer(items)
    old = list(items)
    expected = oracle_rotate(old, r)
    if 0 < r < n:
        g = math.gcd(n, n - r)
        cycle_len = n // g
    else:
        g = cycle_len = 0
    ctx = _RunContext(algorithm=algorithm, buf=work, n=n, r=r, old=old,
                      expected=expected, g=g, cycle_len=cycle_len)
    try:
        ALGORITHMS[algorithm](work, r, Counters(), probe=_Checker(ctx))
    except _Violated as exc:
        return exc.violation
    if work.snapshot() != expected:
        return InvariantViolation(
            algorithm, "post", 0,
            "final buffer differs from the reference rotation")
    return None


def invariant_sweep(max_n: int = 48, algorithms: Optional[Sequence[str]] = None,
                    ) -> tuple[int, Optional[InvariantViolation]]:
    """Exhaustive checked runs: every algorithm, every n <= max_n, every r.

    Buffers carry pairwise-distinct elements.  Returns ``(runs, None)`` on
    full success, or the number of runs performed up to and including the
    first violation together with that violation.
    """
    names = tuple(algorithms) if algorithms is not None else tuple(ALGORITHMS)
    runs = 0
    for n in range(2, max_n + 1):
        base = list(range(n))
        for r in range(1, n):
            for name in names:
                runs += 1
                violation = run_checked(name, base, r, check_limit=max(max_n, n))
                if violation is not None:
                    return runs, violation
    return runs, None

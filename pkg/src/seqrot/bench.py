"""Timing and operation-count sweeps over the rotation algorithms.

A sweep times every requested (algorithm, n, r) cell, refilling the buffer
identically per cell from a seed, and snapshots the cell's operation
counters.  Counter identities (swap totals, write totals, scratch peaks)
are verified against closed-form expectations computed independently with
``math.gcd``, and results serialize to CSV.

Wall-clock columns vary run to run; counter columns are deterministic for
a given config.
"""

from __future__ import annotations

import logging
import math
import random
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Optional, Sequence, Union

from .algorithms import (
    ALGORITHMS,
    SWAP_RECURSIVE_MAX_DEPTH,
    SWAP_RECURSIVE_MAX_N,
    swap_recursion_depth,
)
from .buffer import Counters, ElementBuffer

log = logging.getLogger(__name__)

#: Algorithms a sweep runs when asked for "all": the five distinct
#: strategies, with the iterative section-swap standing in for the family.
ALL_ALGORITHMS = ("copy", "copy-native", "reverse", "swap", "modulo")

CSV_HEADER = ("algorithm,n,r,elapsed_ns,reads,writes,swaps,"
              "aux_peak,depth_max,repetitions")


@dataclass(frozen=True)
class SweepConfig:
    """What to measure: sizes, rotation amounts, algorithms, seed, reps.

    ``amount_policy`` is ``"all"`` (every 0 < r < n; r = 0 is skipped as
    the identity), ``"sample:K"`` (K seeded distinct amounts per size), or
    an explicit sequence of amounts applied to every size.
    """

    sizes: tuple[int, ...]
    algorithms: tuple[str, ...] = ALL_ALGORITHMS
    amount_policy: Union[str, tuple[int, ...]] = "all"
    seed: int = 0
    repetitions: int = 1

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("sweep needs at least one size")
        if any(n < 2 for n in self.sizes):
            raise ValueError(f"sizes must all be >= 2, got {self.sizes}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ValueError(f"unknown algorithms: {unknown}")
        if isinstance(self.amount_policy, str):
            if self.amount_policy != "all":
                kind, _, k = self.amount_policy.partition(":")
                if kind != "sample" or not k.isdigit() or int(k) < 1:
                    raise ValueError(
                        f"amount policy must be 'all', 'sample:K', or an "
                        f"explicit list, got {self.amount_policy!r}"
                    )


@dataclass(frozen=True)
class BenchRecord:
    """One measured (algorithm, n, r) cell."""

    algorithm: str
    n: int
    r: int
    elapsed_ns: int
    reads: int
    writes: int
    swaps: int
    aux_peak: int
    depth_max: int
    repetitions: int

    def csv_row(self) -> str:
        return (f"{self.algorithm},{self.n},{self.r},{self.elapsed_ns},"
                f"{self.reads},{self.writes},{self.swaps},"
                f"{self.aux_peak},{self.depth_max},{self.repetitions}")


def _amounts(config: SweepConfig, n: int) -> list[int]:
    policy = config.amount_policy
    if policy == "all":
        return list(range(1, n))
    if isinstance(policy, str):  # validated as sample:K in __post_init__
        k = int(policy.partition(":")[2])
        if k >= n - 1:
            return list(range(1, n))
        rng = random.Random(f"{config.seed}:amounts:{n}")
        return sorted(rng.sample(range(1, n), k))
    amounts = [int(r) for r in policy]
    bad = [r for r in amounts if not 0 < r < n]
    if bad:
        raise ValueError(f"fixed amounts {bad} invalid for size {n}")
    return amounts


def _fill(seed: int, n: int, r: int) -> list[int]:
    """Deterministic machine-word elements for one (n, r) cell."""
    rng = random.Random(f"{seed}:fill:{n}:{r}")
    return [rng.getrandbits(63) for _ in range(n)]


def _skip_recursive(n: int, r: int) -> bool:
    return (n > SWAP_RECURSIVE_MAX_N
            or swap_recursion_depth(r, n) > SWAP_RECURSIVE_MAX_DEPTH)


def sweep(config: SweepConfig) -> list[BenchRecord]:
    """Run the configured sweep and return one record per measured cell.

    Each cell is timed ``repetitions`` times on identical fresh copies of
    its seeded fill (copying happens outside the timed region); the median
    time is reported.  Counters come from the final repetition and are
    identical across repetitions.  Recursive-swap cells beyond the depth
    guard are skipped with a log note instead of measured.
    """
    records = []
    for n in config.sizes:
        per_size_amounts = _amounts(config, n)
        for algorithm in config.algorithms:
            run = ALGORITHMS[algorithm]
            for r in per_size_amounts:
                if algorithm == "swap-rec" and _skip_recursive(n, r):
                    log.info("skipping swap-rec at n=%d r=%d: beyond the "
                             "recursion depth guard", n, r)
                    continue
                base = _fill(config.seed, n, r)
                times = []
                counters = Counters()
                for _ in range(config.repetitions):
                    work = ElementBuffer(base.copy())
                    counters = Counters()
                    begin = time.perf_counter_ns()
                    run(work, r, counters)
                    times.append(time.perf_counter_ns() - begin)
                records.append(BenchRecord(
                    algorithm=algorithm, n=n, r=r,
                    elapsed_ns=max(1, int(statistics.median(times))),
                    reads=counters.reads, writes=counters.writes,
                    swaps=counters.swaps, aux_peak=counters.aux_peak,
                    depth_max=counters.depth_max,
                    repetitions=config.repetitions,
                ))
    return records


def expected_counters(algorithm: str, n: int, r: int) -> dict[str, int]:
    """Closed-form counter expectations for one cell with 0 < r < n.

    Computed with ``math.gcd``, independently of the instrumented
    algorithms and of the subtraction-based kernel gcd.
    """
    if not 0 < r < n:
        raise ValueError(f"expected_counters: need 0 < r < n, got ({n}, {r})")
    if algorithm in ("swap", "swap-rec"):
        return {"swaps": n - math.gcd(r, n - r), "aux_peak": 1}
    if algorithm == "modulo":
        return {"writes": n, "aux_peak": 1}
    if algorithm == "reverse":
        total = ((r + 1) // 2) + ((n - r + 1) // 2) + ((n + 1) // 2)
        return {"swaps": total, "aux_peak": 1}
    if algorithm == "copy":
        return {"aux_peak": n}
    if algorithm == "copy-native":
        return {"aux_peak": min(r, n - r)}
    raise ValueError(f"unknown algorithm {algorithm!r}")


def verify_counters(records: Sequence[BenchRecord]) -> list[str]:
    """Check every record against its counter identities.

    Returns a list of human-readable discrepancies; an empty list means
    all identities held.  A non-empty result signals a bug in an
    algorithm or in the counting itself.
    """
    problems = []
    for rec in records:
        for field_name, want in expected_counters(rec.algorithm, rec.n, rec.r).items():
            got = getattr(rec, field_name)
            if got != want:
                problems.append(
                    f"{rec.algorithm} n={rec.n} r={rec.r}: "
                    f"{field_name}={got}, expected {want}"
                )
    return problems


def write_csv(records: Sequence[BenchRecord],
              destination: Union[str, Path, IO[str]]) -> None:
    """Write records as CSV, sorted by (algorithm, n, r).

    Fixed header ``algorithm,n,r,elapsed_ns,reads,writes,swaps,aux_peak,
    depth_max,repetitions``; plain base-10 integers throughout.
    """
    ordered = sorted(records, key=lambda rec: (rec.algorithm, rec.n, rec.r))
    lines = [CSV_HEADER] + [rec.csv_row() for rec in ordered]
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text)


def median_elapsed(records: Sequence[BenchRecord], algorithm: str,
                   n: int) -> float:
    """Median of the recorded cell times for one algorithm at one size."""
    times = [rec.elapsed_ns for rec in records
             if rec.algorithm == algorithm and rec.n == n]
    if not times:
        raise ValueError(f"no records for {algorithm} at n={n}")
    return statistics.median(times)


def doubling_ratio(records: Sequence[BenchRecord], algorithm: str,
                   n_small: int, n_large: int) -> float:
    """Median-time ratio between two sizes; near 2 for linear algorithms."""
    return (median_elapsed(records, algorithm, n_large)
            / median_elapsed(records, algorithm, n_small))

"""Figure rendering for benchmark sweeps.

Renders the sweep records the harness produces into PNG files next to the
CSV output: a time-scaling chart across sizes and an operation-count
profile across rotation amounts.  Matplotlib runs headless (Agg).
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchRecord, median_elapsed

_COUNTER_FIELDS = ("reads", "writes", "swaps", "aux_peak")


def _algorithms(records: Sequence[BenchRecord]) -> list[str]:
    return sorted({rec.algorithm for rec in records})


def plot_time_scaling(records: Sequence[BenchRecord], path: Path) -> None:
    """Median cell time versus size, one line per algorithm, log-log."""
    sizes = sorted({rec.n for rec in records})
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for algorithm in _algorithms(records):
        medians = [median_elapsed(records, algorithm, n) for n in sizes]
        ax.plot(sizes, medians, marker="o", label=algorithm)
    ax.set_xlabel("buffer size n")
    ax.set_ylabel("median time per rotation (ns)")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title("rotation time scaling")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def plot_counter_profile(records: Sequence[BenchRecord], path: Path,
                         n: int | None = None) -> None:
    """Operation counts versus rotation amount at one size (2x2 panels)."""
    if n is None:
        n = max(rec.n for rec in records)
    at_n = [rec for rec in records if rec.n == n]
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    for axis, field in zip(axes.flat, _COUNTER_FIELDS):
        for algorithm in _algorithms(at_n):
            cells = sorted((rec.r, getattr(rec, field)) for rec in at_n
                           if rec.algorithm == algorithm)
            axis.plot([c[0] for c in cells], [c[1] for c in cells],
                      lw=1, label=algorithm)
        axis.set_ylabel(field)
        axis.grid(True, alpha=0.3)
    for axis in axes[1]:
        axis.set_xlabel("rotation amount r")
    axes[0][0].legend(fontsize="small")
    fig.suptitle(f"operation counts at n={n}")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_bench_figures(records: Sequence[BenchRecord],
                         out_dir: str | Path) -> list[Path]:
    """Render the standard report figures into ``out_dir``; returns paths."""
    if not records:
        raise ValueError("no records to plot")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    times_path = out / "bench_times.png"
    counters_path = out / "bench_counters.png"
    plot_time_scaling(records, times_path)
    plot_counter_profile(records, counters_path)
    return [times_path, counters_path]

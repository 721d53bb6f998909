"""Tests for benchmark figure rendering."""

import pytest

from seqrot.bench import SweepConfig, sweep
from seqrot.plots import render_bench_figures


def test_renders_both_figures(tmp_path):
    records = sweep(SweepConfig(sizes=(8, 16), algorithms=("swap", "modulo"),
                                amount_policy="sample:3"))
    paths = render_bench_figures(records, tmp_path / "figs")
    assert [p.name for p in paths] == ["bench_times.png", "bench_counters.png"]
    for path in paths:
        assert path.is_file()
        assert path.stat().st_size > 0


def test_rejects_empty_records(tmp_path):
    with pytest.raises(ValueError):
        render_bench_figures([], tmp_path)

"""Tests for the oracle, the lemma checkers, and invariant-checked runs."""

import pytest

from seqrot.algorithms import ALGORITHMS, SITE_COPY
from seqrot.buffer import Counters, ElementBuffer
from seqrot.verify import (
    INVARIANTS,
    LEMMA_IDS,
    check_lemma_invert_mp,
    check_lemma_rev_cat,
    check_lemma_rot_swap,
    check_rot_pointwise,
    check_wrap_bounds,
    invariant_sweep,
    oracle_rotate,
    run_checked,
)

ABCDEF = list("ABCDEF")


class TestOracleRotate:
    def test_running_example(self):
        assert oracle_rotate(ABCDEF, 2) == list("CDEFAB")

    def test_zero_is_identity(self):
        got = oracle_rotate(ABCDEF, 0)
        assert got == ABCDEF
        assert got is not ABCDEF

    def test_negative_amount(self):
        assert oracle_rotate(ABCDEF, -4) == list("CDEFAB")

    def test_input_untouched(self):
        items = ABCDEF.copy()
        oracle_rotate(items, 3)
        assert items == ABCDEF

    def test_large_amounts_normalized(self):
        assert oracle_rotate(ABCDEF, 8) == oracle_rotate(ABCDEF, 2)
        assert oracle_rotate(ABCDEF, -10) == oracle_rotate(ABCDEF, 2)
        assert oracle_rotate(ABCDEF, 6) == ABCDEF

    def test_empty(self):
        assert oracle_rotate([], 5) == []

    def test_composition_is_identity(self):
        for n in range(1, 65):
            items = list(range(n))
            for r in range(n):
                assert oracle_rotate(oracle_rotate(items, r), n - r) == items


class TestLemmaCheckers:
    def test_wrap_bounds(self):
        report = check_wrap_bounds(64)
        assert report.ok
        assert report.cases == 64 * 65

    def test_wrap_bounds_default_domain(self):
        report = check_wrap_bounds()
        assert report.ok
        assert report.domain_bound == 512

    def test_pointwise_small(self):
        report = check_rot_pointwise(6)
        assert report.ok
        assert report.cases == sum(n * n for n in range(1, 7))

    def test_pointwise_trivial(self):
        assert check_rot_pointwise(1).ok

    def test_pointwise_default_bound(self):
        assert check_rot_pointwise(64).ok

    def test_rev_cat(self):
        report = check_lemma_rev_cat(8)
        assert report.ok
        assert report.cases == 81

    def test_rev_cat_direct_instance(self):
        s, t = list("AB"), list("CDEF")
        assert list(reversed(s + t)) == list("FEDCBA")
        assert list(reversed(s + t)) == list(reversed(t)) + list(reversed(s))

    def test_rev_cat_empty_bound(self):
        report = check_lemma_rev_cat(0)
        assert report.ok
        assert report.cases == 1

    def test_rot_swap(self):
        left, right = check_lemma_rot_swap(9)
        assert left.ok and right.ok
        assert left.lemma_id == "rot_swap_left"
        assert right.lemma_id == "rot_swap_right"
        assert left.cases > 0 and right.cases > 0
        # empty-mid instances are skipped on the left side only
        assert right.cases > left.cases

    def test_rot_swap_two_element_instance(self):
        # single-element sides with empty mid: rot(XZ, 1) = ZX = rot(Z, 1).X
        x, z = ["x"], ["z"]
        assert oracle_rotate(x + z, 1) == z + x
        assert oracle_rotate(z, 1) + x == z + x  # rot by the full length wraps

    def test_invert_mp(self):
        report = check_lemma_invert_mp(32)
        assert report.ok
        assert report.cases == sum(n * (n - 1) for n in range(2, 33))

    def test_lemma_ids_cover_enum(self):
        reports = [check_wrap_bounds(8), check_rot_pointwise(4),
                   check_lemma_rev_cat(3), *check_lemma_rot_swap(4),
                   check_lemma_invert_mp(4)]
        assert sorted(r.lemma_id for r in reports) == sorted(LEMMA_IDS)

    def test_summary_line_format(self):
        line = check_lemma_rev_cat(2).summary_line()
        assert line == "lemma=rev_cat bound=2 cases=9 failures=0"

    @pytest.mark.parametrize("checker, bad", [
        (check_rot_pointwise, 0),
        (check_lemma_rev_cat, -1),
        (check_lemma_rot_swap, 0),
        (check_lemma_invert_mp, 1),
    ])
    def test_bound_validation(self, checker, bad):
        with pytest.raises(ValueError):
            checker(bad)


class TestInvariantRegistry:
    def test_ids_are_unique(self):
        ids = [spec.invariant_id for spec in INVARIANTS]
        assert len(ids) == len(set(ids))

    def test_required_ids_registered(self):
        required = (
            [f"Eq.{k}" for k in range(9, 18)]
            + [f"Eq.{k}" for k in range(19, 25)]
            + [f"Eq.{k}" for k in range(25, 29)]
            + ["Eq.30", "Eq.32"]
            + [f"Eq.{k}" for k in range(34, 38)]
        )
        registered = {spec.invariant_id for spec in INVARIANTS}
        missing = [eq for eq in required if eq not in registered]
        assert not missing


class TestRunChecked:
    @pytest.mark.parametrize("name", sorted(ALGORITHMS))
    def test_running_example_passes(self, name):
        assert run_checked(name, ABCDEF, 2) is None

    def test_zero_rotation_trivially_passes(self):
        assert run_checked("reverse", ABCDEF, 0) is None

    def test_accepts_plain_sequences(self):
        assert run_checked("modulo", b"ABCDEF", 2) is None

    def test_input_not_mutated(self):
        items = ABCDEF.copy()
        run_checked("swap", items, 2)
        assert items == ABCDEF

    def test_size_limit(self):
        with pytest.raises(ValueError, match="check limit"):
            run_checked("copy", list(range(300)), 2)
        assert run_checked("copy", list(range(300)), 2, check_limit=512) is None

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError, match="unknown algorithm"):
            run_checked("bogus", ABCDEF, 2)

    def test_detects_wrong_result(self, monkeypatch):
        def silently_broken(buf, r, counters, probe=None):
            buf[0] = buf[1]  # clobbers an element, emits no probes

        monkeypatch.setitem(ALGORITHMS, "modulo", silently_broken)
        violation = run_checked("modulo", ABCDEF, 2)
        assert violation is not None
        assert violation.invariant_id == "post"
        assert violation.algorithm == "modulo"

    def test_detects_violated_loop_invariant(self, monkeypatch):
        def bad_probe_state(buf, r, counters, probe=None):
            if probe:
                probe(SITE_COPY, "enter", {"s": -1, "d": 0, "scratch": []})

        monkeypatch.setitem(ALGORITHMS, "copy", bad_probe_state)
        violation = run_checked("copy", ABCDEF, 2)
        assert violation is not None
        assert violation.invariant_id == "Eq.9"
        assert violation.iteration == 0
        assert "Eq.9" in str(violation)

    def test_detects_out_of_step_destination(self, monkeypatch):
        def drifting_copy(buf, r, counters, probe=None):
            n = len(buf)
            scratch = [None] * n
            if probe:
                probe(SITE_COPY, "enter", {"s": 0, "d": 0, "scratch": scratch})

        monkeypatch.setitem(ALGORITHMS, "copy", drifting_copy)
        violation = run_checked("copy", ABCDEF, 2)
        assert violation is not None
        assert violation.invariant_id == "Eq.10"


class TestInvariantSweep:
    def test_small_domain_clean(self):
        runs, violation = invariant_sweep(12)
        assert violation is None
        assert runs == sum(n - 1 for n in range(2, 13)) * len(ALGORITHMS)

    def test_subset_of_algorithms(self):
        runs, violation = invariant_sweep(8, algorithms=("modulo",))
        assert violation is None
        assert runs == sum(n - 1 for n in range(2, 9))

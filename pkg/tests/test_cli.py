"""Black-box tests for the command-line interface."""

import random
import subprocess
import sys

import pytest

from seqrot.cli import main, split_lines

CMD = [sys.executable, "-m", "seqrot.cli"]


def run_cli(*args, data=b"", env=None):
    return subprocess.run(CMD + list(args), input=data, capture_output=True,
                          env=env, timeout=120)


class TestSplitLines:
    def test_trailing_newline_kept_per_unit(self):
        assert split_lines(b"a\nbb\n") == [b"a\n", b"bb\n"]

    def test_final_unit_without_newline(self):
        assert split_lines(b"a\nbb") == [b"a\n", b"bb"]

    def test_empty_lines(self):
        assert split_lines(b"\n\nx") == [b"\n", b"\n", b"x"]

    def test_empty_input(self):
        assert split_lines(b"") == []

    def test_join_round_trip(self):
        rng = random.Random(5)
        for _ in range(50):
            blob = bytes(rng.choice(b"ab\n") for _ in range(rng.randint(0, 40)))
            assert b"".join(split_lines(blob)) == blob


class TestRotateBytes:
    def test_running_example(self):
        result = run_cli("rotate", "--by", "2", data=b"ABCDEF")
        assert result.returncode == 0
        assert result.stdout == b"CDEFAB"

    def test_right_rotation_equivalence(self):
        result = run_cli("rotate", "--by", "4", "--right", data=b"ABCDEF")
        assert result.returncode == 0
        assert result.stdout == b"CDEFAB"

    def test_zero_passthrough(self):
        result = run_cli("rotate", "--by", "0", data=b"ABCDEF")
        assert (result.returncode, result.stdout) == (0, b"ABCDEF")

    def test_empty_input(self):
        result = run_cli("rotate", "--by", "3", data=b"")
        assert (result.returncode, result.stdout) == (0, b"")

    @pytest.mark.parametrize("algo", ["copy", "copy-native", "reverse",
                                      "swap", "swap-rec", "modulo"])
    def test_every_algorithm(self, algo):
        result = run_cli("rotate", "--algo", algo, "--by", "-4", data=b"ABCDEF")
        assert result.stdout == b"CDEFAB"

    def test_file_io(self, tmp_path):
        src = tmp_path / "in.bin"
        dst = tmp_path / "out.bin"
        src.write_bytes(b"ABCDEF")
        result = run_cli("rotate", "--by", "2", "-o", str(dst), str(src))
        assert result.returncode == 0
        assert dst.read_bytes() == b"CDEFAB"

    def test_round_trip(self):
        rng = random.Random(11)
        for _ in range(5):
            blob = rng.randbytes(rng.randint(0, 2000))
            by = rng.randint(-4000, 4000)
            once = run_cli("rotate", "--by", str(by), data=blob)
            back = run_cli("rotate", "--by", str(by), "--right",
                           data=once.stdout)
            assert back.stdout == blob


class TestRotateLines:
    def test_line_units(self):
        result = run_cli("rotate", "--unit", "lines", "--by", "1",
                         data=b"alpha\nbeta\ngamma")
        assert result.stdout == b"beta\ngammaalpha\n"

    def test_round_trip_with_trailing_newline(self):
        blob = b"one\ntwo\nthree\nfour\n"
        once = run_cli("rotate", "--unit", "lines", "--by", "3", data=blob)
        assert once.stdout == b"four\none\ntwo\nthree\n"
        back = run_cli("rotate", "--unit", "lines", "--by", "3", "--right",
                       data=once.stdout)
        assert back.stdout == blob

    def test_unterminated_final_line_is_one_unit(self):
        # the moved final unit keeps its exact bytes (no newline added), so
        # unit boundaries merge and a piped round-trip is not expected here
        result = run_cli("rotate", "--unit", "lines", "--by", "3",
                         data=b"one\ntwo\nthree\nfour")
        assert result.stdout == b"fourone\ntwo\nthree\n"


class TestRotateChecksAndVerify:
    def test_verify_clean(self):
        result = run_cli("rotate", "--by", "2", "--verify", data=b"ABCDEF")
        assert (result.returncode, result.stdout) == (0, b"CDEFAB")

    def test_verify_catches_corruption(self, monkeypatch):
        import os

        env = dict(os.environ, SEQROT_DEBUG_CORRUPT="1")
        result = run_cli("rotate", "--by", "2", "--verify", data=b"ABCDEF",
                         env=env)
        assert result.returncode == 2
        assert b"verification failed" in result.stderr

    def test_check_clean(self):
        result = run_cli("rotate", "--by", "2", "--check", "--algo", "modulo",
                         data=b"ABCDEF")
        assert (result.returncode, result.stdout) == (0, b"CDEFAB")

    def test_check_size_limit(self):
        result = run_cli("rotate", "--by", "2", "--check", data=b"x" * 300)
        assert result.returncode == 1
        assert b"check limit" in result.stderr


class TestExitCodes:
    def test_missing_required_flag(self):
        assert run_cli("rotate", data=b"x").returncode == 1

    def test_bad_algorithm(self):
        assert run_cli("rotate", "--algo", "nope", "--by", "1",
                       data=b"x").returncode == 1

    def test_unknown_subcommand(self):
        assert run_cli("frobnicate").returncode == 1

    def test_no_subcommand(self):
        assert run_cli().returncode == 1

    def test_missing_input_file(self, tmp_path):
        result = run_cli("rotate", "--by", "1", str(tmp_path / "absent.bin"))
        assert result.returncode == 3

    def test_unwritable_output(self, tmp_path):
        result = run_cli("rotate", "--by", "1",
                         "-o", str(tmp_path / "no_dir" / "out.bin"),
                         data=b"xy")
        assert result.returncode == 3

    def test_help_exits_zero(self):
        assert run_cli("--help").returncode == 0


class TestDecompose:
    def test_running_example(self):
        result = run_cli("decompose", "--n", "6", "--by", "2")
        assert result.returncode == 0
        lines = result.stdout.decode().splitlines()
        assert lines[0] == "g = 2"
        assert lines[1] == "tau = 3"
        assert lines[2] == "0 → 4 → 2 → 0"
        assert lines[3] == "1 → 5 → 3 → 1"

    def test_coprime_single_cycle(self):
        result = run_cli("decompose", "--n", "5", "--by", "1")
        lines = result.stdout.decode().splitlines()
        assert lines[0] == "g = 1"
        assert lines[1] == "tau = 5"
        assert len(lines) == 3

    def test_four_cycles_of_three(self):
        result = run_cli("decompose", "--n", "12", "--by", "8")
        lines = result.stdout.decode().splitlines()
        assert lines[0] == "g = 4"
        assert lines[1] == "tau = 3"
        assert len(lines) == 6

    def test_normalizes_amount(self):
        direct = run_cli("decompose", "--n", "6", "--by", "2")
        wrapped = run_cli("decompose", "--n", "6", "--by", "-4")
        assert direct.stdout == wrapped.stdout

    @pytest.mark.parametrize("n, by", [("6", "0"), ("6", "6"), ("0", "1")])
    def test_domain_errors(self, n, by):
        assert run_cli("decompose", "--n", n, "--by", by).returncode == 1


class TestBenchCommand:
    def test_csv_to_file(self, tmp_path):
        target = tmp_path / "out.csv"
        result = run_cli("bench", "--sizes", "16", "--rs", "sample:3",
                         "--reps", "1", "--csv", str(target))
        assert result.returncode == 0
        lines = target.read_text().splitlines()
        assert lines[0].startswith("algorithm,n,r,")
        assert len(lines) == 1 + 5 * 3  # five algorithms, three amounts

    def test_csv_to_stdout(self):
        result = run_cli("bench", "--sizes", "8", "--algos", "swap",
                         "--reps", "1")
        assert result.returncode == 0
        assert len(result.stdout.decode().splitlines()) == 1 + 7

    def test_fixed_amounts_and_figures(self, tmp_path):
        figdir = tmp_path / "figs"
        result = run_cli("bench", "--sizes", "8,16", "--algos", "swap,modulo",
                         "--rs", "1,3", "--reps", "1",
                         "--csv", str(tmp_path / "b.csv"),
                         "--plot", str(figdir))
        assert result.returncode == 0
        assert (figdir / "bench_times.png").is_file()
        assert (figdir / "bench_counters.png").is_file()

    @pytest.mark.parametrize("args", [
        ("--sizes", "1"),
        ("--sizes", "16", "--algos", "warp"),
        ("--sizes", "16", "--rs", "sample:zero"),
        ("--sizes", "16", "--reps", "0"),
    ])
    def test_config_errors(self, args):
        assert run_cli("bench", *args).returncode == 1


class TestSelftestCommand:
    def test_small_bounds_pass(self):
        result = run_cli("selftest", "--max-n", "12", "--max-len", "5",
                         "--check-n", "8")
        assert result.returncode == 0
        lines = result.stdout.decode().splitlines()
        lemma_lines = [ln for ln in lines if ln.startswith("lemma=")]
        assert len(lemma_lines) == 6
        assert all("failures=0" in ln for ln in lemma_lines)
        assert lines[-1].startswith("checked-runs ")
        assert "status=ok" in lines[-1]

    def test_degenerate_length_bound(self):
        result = run_cli("selftest", "--max-n", "4", "--max-len", "0",
                         "--check-n", "4")
        assert result.returncode == 0


class TestInProcessEntry:
    def test_main_returns_exit_code(self, capsys, tmp_path):
        src = tmp_path / "in.bin"
        src.write_bytes(b"ABCDEF")
        dst = tmp_path / "out.bin"
        assert main(["rotate", "--by", "2", "-o", str(dst), str(src)]) == 0
        assert dst.read_bytes() == b"CDEFAB"

"""Command-line front end.

Subcommands:

* ``rotate``: circularly shift the bytes or lines of a file or stream.
* ``decompose``: print the cycle structure of a rotation's index permutation.
* ``bench``: run a timing/counter sweep, verify counter identities, emit
  CSV and (optionally) figures.
* ``selftest``: run the brute-force lemma checkers and the exhaustive
  invariant-checked suite.

Exit codes: 0 success, 1 usage or domain error, 2 verification or
invariant failure, 3 I/O error.  Input and output default to the standard
streams.  Rotation buffers the whole input: rotation is a global
permutation, so memory use is the input size plus the algorithm's
auxiliary space.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .algorithms import ALGORITHMS, normalize
from .bench import ALL_ALGORITHMS, SweepConfig, sweep, verify_counters, write_csv
from .buffer import Counters, ElementBuffer
from .modular import decompose
from .verify import (
    CHECK_LIMIT_DEFAULT,
    check_lemma_invert_mp,
    check_lemma_rev_cat,
    check_lemma_rot_swap,
    check_rot_pointwise,
    check_wrap_bounds,
    invariant_sweep,
    oracle_rotate,
    run_checked,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

# Test hook: corrupt the rotated output before --verify compares it, to
# exercise the verification-failure exit path end to end.
_CORRUPT_ENV = "SEQROT_DEBUG_CORRUPT"


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with status 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="seqrot",
                     description="Rotate sequences in place; inspect, "
                                 "benchmark, and verify the algorithms.")
    sub = parser.add_subparsers(dest="command", required=True)

    rot = sub.add_parser("rotate", help="rotate the bytes or lines of a file",
                         description="Read the input fully, rotate its units "
                                     "in memory, write the result.")
    rot.add_argument("--algo", choices=sorted(ALGORITHMS), default="swap",
                     help="rotation algorithm (default: swap)")
    rot.add_argument("--by", type=int, required=True, metavar="AMOUNT",
                     help="shift amount; positive rotates left")
    rot.add_argument("--right", action="store_true",
                     help="interpret the amount as a right rotation")
    rot.add_argument("--unit", choices=("bytes", "lines"), default="bytes",
                     help="rotation unit (default: bytes)")
    rot.add_argument("--check", action="store_true",
                     help="run with loop invariants asserted "
                          f"(inputs up to {CHECK_LIMIT_DEFAULT} units)")
    rot.add_argument("--verify", action="store_true",
                     help="cross-check the result against the reference "
                          "rotation; mismatch exits 2")
    rot.add_argument("-o", "--output", metavar="PATH",
                     help="output path (default: standard output)")
    rot.add_argument("input", nargs="?", metavar="INPUT",
                     help="input path (default: standard input)")

    dec = sub.add_parser("decompose",
                         help="print the cycle structure of a rotation")
    dec.add_argument("--n", type=int, required=True, help="sequence length")
    dec.add_argument("--by", type=int, required=True, metavar="AMOUNT",
                     help="shift amount; positive rotates left")

    ben = sub.add_parser("bench", help="run a benchmark sweep")
    ben.add_argument("--sizes", required=True, metavar="N,N,...",
                     help="comma-separated buffer sizes")
    ben.add_argument("--algos", default="all", metavar="LIST|all",
                     help="comma-separated algorithms, or 'all' for "
                          f"{','.join(ALL_ALGORITHMS)}")
    ben.add_argument("--rs", default="all", metavar="all|sample:K|R,R,...",
                     help="rotation amounts per size (default: all)")
    ben.add_argument("--reps", type=int, default=3, metavar="R",
                     help="timed repetitions per cell (default: 3)")
    ben.add_argument("--seed", type=int, default=0,
                     help="seed for buffer fills and amount sampling")
    ben.add_argument("--csv", metavar="PATH",
                     help="CSV destination (default: standard output)")
    ben.add_argument("--plot", metavar="DIR",
                     help="also render report figures into this directory")

    selftest = sub.add_parser("selftest",
                              help="run lemma checkers and the invariant suite")
    selftest.add_argument("--max-n", type=int, default=None, metavar="N",
                          help="bound for the index-map checkers "
                               "(defaults: pointwise 64, inversion 128)")
    selftest.add_argument("--max-len", type=int, default=None, metavar="L",
                          help="bound for the sequence-identity checkers "
                               "(defaults: reversal 8, swap 9)")
    selftest.add_argument("--check-n", type=int, default=48, metavar="N",
                          help="bound for the invariant-checked runs "
                               "(default: 48)")
    return parser


def _read_input(path: str | None) -> bytes:
    if path is None:
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_output(path: str | None, data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def split_lines(data: bytes) -> list[bytes]:
    """Split into line units on the newline byte only.

    Each unit keeps its trailing newline; a final chunk without one is its
    own unit.  Joining the units always reproduces the input exactly.
    """
    units = []
    start = 0
    while True:
        cut = data.find(b"\n", start)
        if cut == -1:
            if start < len(data):
                units.append(data[start:])
            return units
        units.append(data[start:cut + 1])
        start = cut + 1


def cmd_rotate(args) -> int:
    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"seqrot: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO

    if args.unit == "bytes":
        units = bytearray(data)
    else:
        units = split_lines(data)
    amount = -args.by if args.right else args.by
    request = normalize(amount, len(units))
    original = list(units)

    if args.check:
        try:
            violation = run_checked(args.algo, units, request.r_left)
        except ValueError as exc:
            print(f"seqrot: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if violation is not None:
            print(f"seqrot: invariant check failed: {violation}",
                  file=sys.stderr)
            return EXIT_VERIFY

    ALGORITHMS[args.algo](ElementBuffer(units), request.r_left, Counters())

    if os.environ.get(_CORRUPT_ENV) and len(units) > 1:
        units[0], units[1] = units[1], units[0]

    if args.verify:
        if list(units) != oracle_rotate(original, amount):
            print("seqrot: verification failed: result differs from the "
                  "reference rotation", file=sys.stderr)
            return EXIT_VERIFY

    payload = bytes(units) if args.unit == "bytes" else b"".join(units)
    try:
        _write_output(args.output, payload)
    except OSError as exc:
        print(f"seqrot: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_decompose(args) -> int:
    request = normalize(args.by, args.n) if args.n > 0 else None
    if request is None or not 0 < request.r_left < args.n:
        print(f"seqrot: decompose needs a length and amount with "
              f"0 < amount mod n < n; got n={args.n} amount={args.by}",
              file=sys.stderr)
        return EXIT_USAGE
    cycles = decompose(args.n, request.r_left)
    print(f"g = {cycles.g}")
    print(f"tau = {cycles.tau}")
    for start in cycles.starts:
        print(" → ".join(str(index) for index in cycles.cycle(start)))
    return EXIT_OK


def _parse_bench_config(args) -> SweepConfig:
    sizes = tuple(int(tok) for tok in args.sizes.split(",") if tok)
    if args.algos == "all":
        algorithms = ALL_ALGORITHMS
    else:
        algorithms = tuple(tok for tok in args.algos.split(",") if tok)
    policy: str | tuple[int, ...]
    if args.rs == "all" or args.rs.startswith("sample:"):
        policy = args.rs
    else:
        policy = tuple(int(tok) for tok in args.rs.split(",") if tok)
    return SweepConfig(sizes=sizes, algorithms=algorithms,
                       amount_policy=policy, seed=args.seed,
                       repetitions=args.reps)


def cmd_bench(args) -> int:
    try:
        config = _parse_bench_config(args)
    except ValueError as exc:
        print(f"seqrot: bad bench configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = sweep(config)
    problems = verify_counters(records)
    if problems:
        for line in problems[:20]:
            print(f"seqrot: counter identity failed: {line}", file=sys.stderr)
        return EXIT_VERIFY
    try:
        if args.csv:
            write_csv(records, args.csv)
        else:
            write_csv(records, sys.stdout)
        if args.plot:
            from . import plots  # matplotlib import deferred until needed

            for path in plots.render_bench_figures(records, args.plot):
                print(f"seqrot: wrote {path}", file=sys.stderr)
    except OSError as exc:
        print(f"seqrot: cannot write results: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_selftest(args) -> int:
    pointwise_n = args.max_n if args.max_n is not None else 64
    inversion_n = args.max_n if args.max_n is not None else 128
    rev_len = args.max_len if args.max_len is not None else 8
    swap_len = args.max_len if args.max_len is not None else 9

    reports = [check_wrap_bounds()]
    reports.append(check_rot_pointwise(pointwise_n))
    reports.append(check_lemma_rev_cat(rev_len))
    reports.extend(check_lemma_rot_swap(max(1, swap_len)))
    reports.append(check_lemma_invert_mp(max(2, inversion_n)))
    failures = 0
    for report in reports:
        print(report.summary_line())
        failures += len(report.failures)

    runs, violation = invariant_sweep(args.check_n)
    status = "ok" if violation is None else f"VIOLATION {violation}"
    print(f"checked-runs max-n={args.check_n} runs={runs} status={status}")

    return EXIT_OK if failures == 0 and violation is None else EXIT_VERIFY


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "rotate": cmd_rotate,
        "decompose": cmd_decompose,
        "bench": cmd_bench,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"seqrot: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"seqrot: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

"""In-place sequence rotation: algorithms, verification, benchmarks.

The package rotates a mutable sequence of opaque elements left or right by
any amount, in place, with a choice of five classic algorithms, and keeps
exact counts of every element read, write, and swap.  A verification layer
provides an independent reference rotation, brute-force checkers for the
identities the algorithms rely on, and instrumented runs that assert every
loop invariant at runtime.  A benchmark harness sweeps algorithms, sizes,
and amounts into CSV records with verified counter identities.
"""

from .algorithms import (
    ALGORITHMS,
    SWAP_RECURSIVE_MAX_DEPTH,
    SWAP_RECURSIVE_MAX_N,
    RotationRequest,
    normalize,
    reverse,
    rotate_copy,
    rotate_copy_native,
    rotate_modulo,
    rotate_reverse,
    rotate_swap_iterative,
    rotate_swap_recursive,
    swap_recursion_depth,
    swap_sections,
)
from .bench import (
    ALL_ALGORITHMS,
    BenchRecord,
    SweepConfig,
    doubling_ratio,
    expected_counters,
    median_elapsed,
    sweep,
    verify_counters,
    write_csv,
)
from .buffer import Counters, ElementBuffer
from .modular import (
    CycleDecomposition,
    decompose,
    dest_index,
    ext_gcd,
    gcd_sub,
    invert_mp,
    mp,
    src_index,
    tau,
    wrap,
)
from .verify import (
    CHECK_LIMIT_DEFAULT,
    INVARIANTS,
    LEMMA_IDS,
    InvariantSpec,
    InvariantViolation,
    LemmaReport,
    check_lemma_invert_mp,
    check_lemma_rev_cat,
    check_lemma_rot_swap,
    check_rot_pointwise,
    check_wrap_bounds,
    invariant_sweep,
    oracle_rotate,
    run_checked,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ALL_ALGORITHMS",
    "BenchRecord",
    "CHECK_LIMIT_DEFAULT",
    "Counters",
    "CycleDecomposition",
    "ElementBuffer",
    "INVARIANTS",
    "InvariantSpec",
    "InvariantViolation",
    "LEMMA_IDS",
    "LemmaReport",
    "RotationRequest",
    "SWAP_RECURSIVE_MAX_DEPTH",
    "SWAP_RECURSIVE_MAX_N",
    "SweepConfig",
    "check_lemma_invert_mp",
    "check_lemma_rev_cat",
    "check_lemma_rot_swap",
    "check_rot_pointwise",
    "check_wrap_bounds",
    "decompose",
    "dest_index",
    "doubling_ratio",
    "expected_counters",
    "ext_gcd",
    "gcd_sub",
    "invariant_sweep",
    "invert_mp",
    "median_elapsed",
    "mp",
    "normalize",
    "oracle_rotate",
    "reverse",
    "rotate_copy",
    "rotate_copy_native",
    "rotate_modulo",
    "rotate_reverse",
    "rotate_swap_iterative",
    "rotate_swap_recursive",
    "run_checked",
    "src_index",
    "swap_recursion_depth",
    "swap_sections",
    "sweep",
    "tau",
    "verify_counters",
    "wrap",
    "write_csv",
]

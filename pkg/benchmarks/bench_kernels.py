"""Compare the compiled kernels against the interpreted fallback.

The fallback is selected by TOURNEY_JIT=0 at import time, so each leg runs
in its own subprocess and reports per-workload wall times; the parent
process prints the side-by-side table.  Run with no arguments:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import os
import random
import subprocess
import sys
import time


def build_workloads():
    import tourney.verification as V
    from tourney import (
        FamilySpec,
        assemble_family,
        canonical_code,
        census_entries,
        check_sayar,
        is_indecomposable,
        random_tournament,
        w5_vertex_set,
    )

    rng = random.Random(2024)
    nine = [random_tournament(9, rng) for _ in range(300)]
    twelve = [random_tournament(12, rng) for _ in range(1000)]
    member = assemble_family(FamilySpec("L", (2, 1, 2)))

    def census6():
        V._LEVELS.clear()
        census_entries(6)

    def codes():
        for t in nine:
            t._code = None  # drop the per-object cache so every call pays full price
            canonical_code(t)

    def windows():
        for t in nine:
            w5_vertex_set(t)

    def indec():
        for t in twelve:
            is_indecomposable(t)

    def structural():
        for _ in range(200):
            check_sayar(member, (0, 1, 2))

    return [
        ("census, order 6", census6, 1),
        ("canonical codes, 300 x order 9", codes, 3),
        ("window scans, 300 x order 9", windows, 3),
        ("indecomposability, 1000 x order 12", indec, 3),
        ("structural tests, 200 x order 13", structural, 3),
    ]


def run_leg():
    from tourney._jit import JIT_ENABLED

    print(f"#jit\t{JIT_ENABLED}")
    for name, fn, repeats in build_workloads():
        fn()  # warm caches and, on the compiled leg, the compiler
        best = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        print(f"{name}\t{best:.4f}")


def collect(env_extra):
    env = dict(os.environ, **env_extra)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--leg"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    rows = {}
    jit_flag = None
    for line in proc.stdout.splitlines():
        key, val = line.split("\t")
        if key == "#jit":
            jit_flag = val == "True"
        else:
            rows[key] = float(val)
    return jit_flag, rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--leg", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.leg:
        run_leg()
        return

    jit_on, fast = collect({"TOURNEY_JIT": "1"})
    jit_off, slow = collect({"TOURNEY_JIT": "0"})
    if not jit_on or jit_off:
        print("warning: legs did not run with the intended kernel paths", file=sys.stderr)

    width = max(len(k) for k in fast)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'interpreted':>12}  {'speedup':>8}")
    for name in fast:
        a, b = fast[name], slow[name]
        ratio = b / a if a > 0 else float("inf")
        print(f"{name:<{width}}  {a:>9.4f}s  {b:>11.4f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()

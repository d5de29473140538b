#!/usr/bin/env python3
"""Benchmark the compiled assignment kernel against the pure-Python fallback.

Times raw square solves at several sizes, then a full exhaustive
averaged-balanced run (the hottest real workload). Run from the repo root:

    python benchmarks/kernel_bench.py
"""

import random
import time

import numpy as np

from teamcraft._kernel import pure

try:
    from teamcraft._kernel import _hungarian as compiled
except ImportError:
    compiled = None


def bench_solves(solver, matrices, as_array):
    start = time.perf_counter()
    for m in matrices:
        solver.solve_square(np.asarray(m, dtype=np.int64) if as_array else m)
    return time.perf_counter() - start


def bench_exhaustive(p, r, kernel_env):
    # Re-import the package with the requested backend so the real call
    # path (enumeration + cost build + solve) is measured.
    import os
    import subprocess
    import sys
    import textwrap

    script = textwrap.dedent(
        f"""
        import random, time
        from teamcraft.assembly import averaged_balanced_stats
        from teamcraft.model import ScoreMatrix
        from teamcraft._kernel import BACKEND
        rng = random.Random(99)
        roles = ("IN", "DE", "AN", "IM")[:{r}]
        rows = [tuple(rng.randint(1, 900) for _ in range({r})) for _ in range({p})]
        s = ScoreMatrix.from_rows(rows, roles)
        start = time.perf_counter()
        stats = averaged_balanced_stats(s)
        print(BACKEND, time.perf_counter() - start, stats.assemblies)
        """
    )
    env = dict(os.environ, TEAMCRAFT_KERNEL=kernel_env)
    out = subprocess.run(
        [sys.executable, "-c", script], env=env, capture_output=True, text=True,
        check=True,
    ).stdout.split()
    return out[0], float(out[1]), int(out[2])


def main():
    rng = random.Random(4242)
    print(f"{'workload':<38} {'pure':>10} {'cython':>10} {'speedup':>8}")
    print("-" * 70)

    for k, count in ((5, 2000), (8, 1000), (12, 500)):
        matrices = [
            [[rng.randint(0, 999) for _ in range(k)] for _ in range(k)]
            for _ in range(count)
        ]
        t_pure = bench_solves(pure, matrices, as_array=False)
        if compiled is not None:
            t_comp = bench_solves(compiled, matrices, as_array=True)
            ratio = f"{t_pure / t_comp:7.1f}x"
            comp_cell = f"{t_comp:9.3f}s"
        else:
            comp_cell, ratio = "n/a", ""
        print(
            f"{count} solves, k={k:<24} {t_pure:9.3f}s {comp_cell:>10} {ratio:>8}"
        )

    backend, t_pure, n = bench_exhaustive(12, 4, "pure")
    line = f"exhaustive average p=12 ({n} assemblies)"
    if compiled is not None:
        backend_c, t_comp, _ = bench_exhaustive(12, 4, "")
        ratio = f"{t_pure / t_comp:7.1f}x"
        print(f"{line:<38} {t_pure:9.3f}s {t_comp:9.3f}s {ratio:>8}")
    else:
        print(f"{line:<38} {t_pure:9.3f}s {'n/a':>10}")

    if compiled is None:
        print("\ncompiled kernel not built; only the pure backend was timed")


if __name__ == "__main__":
    main()

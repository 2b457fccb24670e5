"""Compare the compiled and pure-Python Laurent term kernels.

Runs the same seeded workloads against `qchar._laurent_cy` and
`qchar._laurent_py` directly, then times one end-to-end dual canonical basis
computation per kernel in a subprocess (kernel choice is fixed at import
time, so the end-to-end comparison needs a fresh interpreter with or without
QCHAR_PURE=1).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from qchar import _laurent_py

try:
    from qchar import _laurent_cy
except ImportError:
    _laurent_cy = None


def random_terms(rng: random.Random, size: int) -> dict[int, int]:
    out: dict[int, int] = {}
    while len(out) < size:
        out[rng.randint(-30, 30)] = rng.randint(-10**6, 10**6)
    return out


def bench_kernel(kernel, pairs, repeat: int) -> dict[str, float]:
    times: dict[str, float] = {}
    for name, fn in (
        ("term_add", lambda a, b: kernel.term_add(a, b)),
        ("term_mul", lambda a, b: kernel.term_mul(a, b)),
        ("term_scale", lambda a, b: kernel.term_scale(a, 7)),
    ):
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            for a, b in pairs:
                fn(a, b)
            best = min(best, time.perf_counter() - start)
        times[name] = best
    return times


END_TO_END = (
    "import time, qchar.laurent\n"
    "from qchar.combinatorics import Partition, SignedMultiPartition\n"
    "from qchar.bases import dcb_S, weight_blocks\n"
    "shape = SignedMultiPartition(((Partition((2, 1)), '+'),))\n"
    "start = time.perf_counter()\n"
    "for mu, _ in weight_blocks(shape, (1, 3), 'row'):\n"
    "    dcb_S(shape, (1, 3), mu)\n"
    "print(qchar.laurent.KERNEL, time.perf_counter() - start)\n"
)


def bench_end_to_end(pure: bool) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("QCHAR_PURE", None)
    if pure:
        env["QCHAR_PURE"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END],
        env=env,
        check=True,
        capture_output=True,
        text=True,
    ).stdout.split()
    return out[0], float(out[1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(20260824)
    pairs = [(random_terms(rng, 12), random_terms(rng, 12)) for _ in range(2000)]

    py_times = bench_kernel(_laurent_py, pairs, args.repeat)
    print(f"{'operation':<12} {'python (s)':>12}", end="")
    cy_times = None
    if _laurent_cy is not None:
        cy_times = bench_kernel(_laurent_cy, pairs, args.repeat)
        print(f" {'cython (s)':>12} {'speedup':>8}")
    else:
        print("   (cython kernel not built)")
    for name, py_t in py_times.items():
        line = f"{name:<12} {py_t:>12.4f}"
        if cy_times is not None:
            cy_t = cy_times[name]
            line += f" {cy_t:>12.4f} {py_t / cy_t:>7.2f}x"
        print(line)

    print("\nend-to-end dcb_S, shape 2,1:+ window 1..3:")
    for pure in (True, False) if _laurent_cy is not None else (True,):
        kernel, seconds = bench_end_to_end(pure)
        print(f"  {kernel:<8} {seconds:.3f}s")

    # sanity: both kernels must agree exactly on every workload pair
    if _laurent_cy is not None:
        for a, b in pairs[:200]:
            assert _laurent_py.term_add(a, b) == _laurent_cy.term_add(a, b)
            assert _laurent_py.term_mul(a, b) == _laurent_cy.term_mul(a, b)
            assert _laurent_py.term_scale(a, 7) == _laurent_cy.term_scale(a, 7)
        print("\nkernels agree on all sampled workloads")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Benchmark the determinant kernels: compiled int64 fast path vs pure Python.

Workloads are Laplacian minors of checkerboard graphs from the link families
(the actual hot loop of the sweeps and the pretzel enumeration) plus random
integer matrices.  The compiled kernel raises OverflowError past int64 and
the dispatcher falls back to the pure kernel, so the large weaving rows also
measure the fallback cost.

Usage: python benchmarks/bench_determinant.py [--repeat N]
"""

import argparse
import time

from detvol.families import Pretzel, TwoBridge, Weaving4, to_diagram
from detvol.kernels import HAVE_COMPILED, bareiss_det, bareiss_det_python
from detvol.multigraph import laplacian


def minor(graph):
    L = laplacian(graph)
    return [row[1:] for row in L[1:]]


def time_fn(fn, matrices, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in matrices:
            fn(m)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    import random

    rng = random.Random(1)
    out = []
    chains = [minor(to_diagram(TwoBridge((2, 3, 1, 4, 2, 3))).shaded)] * 200
    out.append(("2-bridge chains (200x)", chains))
    necklaces = [
        minor(to_diagram(Pretzel((a, a + 1, a + 2, 2, 3))).shaded)
        for a in range(1, 41)
    ]
    out.append(("pretzel necklaces (40x)", necklaces))
    small_weaving = [minor(to_diagram(Weaving4(n)).white) for n in range(2, 16)]
    out.append(("weaving graphs n=2..15", small_weaving))
    big_weaving = [minor(to_diagram(Weaving4(n)).white) for n in range(30, 42)]
    out.append(("weaving graphs n=30..41 (int64 overflow)", big_weaving))
    big_graphs = []
    for _ in range(10):
        n = 30
        edges = [(i, rng.randrange(i)) for i in range(1, n)]
        edges += [
            (rng.randrange(n), rng.randrange(n)) for _ in range(15)
        ]
        from detvol.multigraph import Multigraph

        big_graphs.append(minor(Multigraph(n, edges)))
    out.append(("sparse 30-vertex Laplacians (10x)", big_graphs))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"compiled kernel available: {HAVE_COMPILED}")
    print(f"{'workload':<42}{'pure (ms)':>12}{'dispatch (ms)':>15}{'speedup':>9}")
    for name, matrices in workloads():
        for m in matrices:
            assert bareiss_det(m) == bareiss_det_python(m)
        t_pure = time_fn(bareiss_det_python, matrices, args.repeat) * 1e3
        t_disp = time_fn(bareiss_det, matrices, args.repeat) * 1e3
        print(f"{name:<42}{t_pure:>12.2f}{t_disp:>15.2f}{t_pure / t_disp:>9.1f}x")


if __name__ == "__main__":
    main()

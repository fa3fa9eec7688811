#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-Python fallback.

Runs the same workload twice: once in this process (numba path unless
TRICRIT_PURE is already set) and once in a subprocess with TRICRIT_PURE=1.
Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = """
import json, random, sys, time
import numpy as np
from tricrit.graph import build_graph
from tricrit._kernels import USING_NUMBA, canonical_order, count_colorings, enumerate_partitions

repeat = int(sys.argv[1])
rng = random.Random(42)
graphs = []
for _ in range(300):
    n = rng.randint(7, 10)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
    graphs.append(build_graph(n, edges))

# warm-up triggers compilation on the accelerated path
canonical_order(graphs[0].masks, graphs[0].n)
fixed0 = np.full(graphs[0].n, -1, np.int8)
buf0 = np.full((4, graphs[0].n), -1, np.int8)
enumerate_partitions(graphs[0].masks, graphs[0].n, fixed0, 0, 4, buf0)
count_colorings(graphs[0].masks, graphs[0].n, 3)

results = {}
t0 = time.perf_counter()
for _ in range(repeat):
    for g in graphs:
        canonical_order(g.masks, g.n)
results['canonical_order'] = time.perf_counter() - t0

t0 = time.perf_counter()
for _ in range(repeat):
    for g in graphs:
        fixed = np.full(g.n, -1, np.int8)
        buf = np.full((4, g.n), -1, np.int8)
        enumerate_partitions(g.masks, g.n, fixed, 0, 4, buf)
results['enumerate_partitions'] = time.perf_counter() - t0

t0 = time.perf_counter()
for _ in range(repeat):
    for g in graphs:
        count_colorings(g.masks, g.n, 3)
results['count_colorings'] = time.perf_counter() - t0

print(json.dumps({'numba': USING_NUMBA, 'calls': repeat * len(graphs), 'results': results}))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["TRICRIT_PURE"] = "1"
    else:
        env.pop("TRICRIT_PURE", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(repeat)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--pure-repeat", type=int, default=1, help="pure path is slow; scale separately")
    args = parser.parse_args()

    fast = run(pure=False, repeat=args.repeat)
    pure = run(pure=True, repeat=args.pure_repeat)

    print(f"{'kernel':<22} {'numba us/call':>14} {'pure us/call':>14} {'speedup':>9}")
    for name in fast["results"]:
        f = fast["results"][name] / fast["calls"] * 1e6
        p = pure["results"][name] / pure["calls"] * 1e6
        print(f"{name:<22} {f:>14.2f} {p:>14.2f} {p / f:>8.1f}x")
    if not fast["numba"]:
        print("note: numba unavailable; both columns ran the pure path")


if __name__ == "__main__":
    main()

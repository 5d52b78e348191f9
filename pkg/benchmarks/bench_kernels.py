#!/usr/bin/env python3
"""Compare the numba kernels with their fallbacks.

Edge enumeration: numba loop vs. chunked numpy, in one process.
Coloring search: the same solver run in two subprocesses, with and without
KNESERKIT_DISABLE_NUMBA, since the switch is read at import time.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from kneserkit import kernels
from kneserkit._accel import USE_NUMBA
from kneserkit.core import binomial_system

EDGE_CASES = [
    # (n, k, s, r, distinct)
    (6, 2, 2, 4, False),
    (7, 2, 3, 4, False),
    (6, 3, 2, 5, True),
    (8, 2, 2, 4, True),
]

SEARCH_CASES = [
    # (n, s, r, multiset)
    (6, 2, 4, False),
    (7, 2, 4, False),
    (6, 4, 5, True),
    (6, 1, 2, True),
]

SEARCH_SCRIPT = """
import json, sys, time
from kneserkit.coloring import SearchStats, chromatic_number
from kneserkit.core import KneserInstance, binomial_system
cases, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
chromatic_number(KneserInstance(binomial_system(4, 2, 2), 4, False))  # warm the compile cache
rows = []
for n, s, r, multiset in cases:
    inst = KneserInstance(binomial_system(n, 2, s), r, multiset)
    times, chi, nodes = [], None, 0
    for _ in range(repeat):
        stats = SearchStats()
        t = time.perf_counter()
        chi, _ = chromatic_number(inst, stats=stats)
        times.append(time.perf_counter() - t)
        nodes = stats.nodes
    rows.append({"case": [n, s, r, multiset], "chi": chi, "nodes": nodes, "seconds": min(times)})
print(json.dumps(rows))
"""


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def bench_edges(repeat: int, cases) -> None:
    print("edge enumeration (seconds, best of %d)" % repeat)
    print(f"{'case':<24}{'edges':>10}{'numpy':>10}{'numba':>10}{'speedup':>9}")
    for n, k, s, r, distinct in cases:
        system = binomial_system(n, k, s)
        inc = np.ascontiguousarray(system.incidence(), dtype=np.int64)
        cap = np.array(system.ground.s, dtype=np.int64)
        ref = kernels._kneser_edges_numpy(inc, cap, r, distinct)
        t_np = best_of(lambda: kernels._kneser_edges_numpy(inc, cap, r, distinct), repeat)
        label = f"n={n} k={k} s={s} r={r} {'set' if distinct else 'multi'}"
        if USE_NUMBA:
            got = kernels._kneser_edges_jit(inc, cap, r, distinct)
            assert np.array_equal(got, ref), label
            t_nb = best_of(lambda: kernels._kneser_edges_jit(inc, cap, r, distinct), repeat)
            print(f"{label:<24}{len(ref):>10}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")
        else:
            print(f"{label:<24}{len(ref):>10}{t_np:>10.4f}{'-':>10}{'-':>9}")


def run_search(disable: bool, repeat: int, cases) -> list[dict]:
    env = os.environ.copy()
    env["KNESERKIT_DISABLE_NUMBA"] = "1" if disable else "0"
    res = subprocess.run(
        [sys.executable, "-c", SEARCH_SCRIPT, json.dumps(cases), str(repeat)],
        capture_output=True, text=True, env=env, check=True,
    )
    return json.loads(res.stdout)


def bench_search(repeat: int, cases) -> None:
    print("\ncoloring search (seconds, best of %d)" % repeat)
    fallback = run_search(True, repeat, cases)
    compiled = run_search(False, repeat, cases)
    print(f"{'case':<24}{'chi':>5}{'nodes':>10}{'python':>10}{'numba':>10}{'speedup':>9}")
    ratios = []
    for a, b in zip(fallback, compiled):
        assert a["chi"] == b["chi"] and a["nodes"] == b["nodes"], (a, b)
        n, s, r, multiset = a["case"]
        label = f"n={n} s={s} r={r} {'multi' if multiset else 'set'}"
        ratio = a["seconds"] / max(b["seconds"], 1e-9)
        ratios.append(ratio)
        print(f"{label:<24}{a['chi']:>5}{a['nodes']:>10}{a['seconds']:>10.4f}{b['seconds']:>10.4f}{ratio:>8.1f}x")
    print(f"median speedup {statistics.median(ratios):.1f}x")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smallest case of each kind only")
    args = ap.parse_args()
    edges = EDGE_CASES[:1] if args.quick else EDGE_CASES
    search = SEARCH_CASES[:1] if args.quick else SEARCH_CASES
    if USE_NUMBA:  # compile outside the timed region
        kernels._kneser_edges_jit(np.zeros((2, 1), dtype=np.int64), np.ones(1, dtype=np.int64), 2, True)
    bench_edges(args.repeat, edges)
    bench_search(args.repeat, search)


if __name__ == "__main__":
    main()

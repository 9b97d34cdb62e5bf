"""Compare the compiled kernel backend against the pure-Python fallback.

Runs the hot numeric paths (diagonal triangle, pencil evaluation, adjugate,
full 4p1l and 3p2l solves) through both backends and reports per-call times
and the speedup ratio.

Usage: python3 benchmarks/bench_kernels.py [--n 20000] [--seed 7]
"""
from __future__ import annotations

import argparse
import importlib
import random
import sys
import time


def _load_backend(pure: bool):
    # Backend choice is frozen at import, so reload the kernel package
    # (and everything that captured it) with the override set.
    import os

    if pure:
        os.environ["MINCONIC_PURE_PYTHON"] = "1"
    else:
        os.environ.pop("MINCONIC_PURE_PYTHON", None)
    for name in sorted(sys.modules):
        if name == "minconic" or name.startswith("minconic."):
            del sys.modules[name]
    return importlib.import_module("minconic")


def _random_4p1l(rng: random.Random, mc):
    P = mc.HomogeneousPoint
    L = mc.ProjectiveLine
    while True:
        pts = [P(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(4)]
        a, b = (P(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(2))
        line = L.through(a, b)
        try:
            mc.solve_four_points_line(pts, line)
        except mc.MinconicError:
            continue
        return pts, line


def _random_3p2l(rng: random.Random, mc):
    P = mc.HomogeneousPoint
    L = mc.ProjectiveLine
    while True:
        pts = [P(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(3)]
        ls = []
        for _ in range(2):
            a = P(rng.uniform(-10, 10), rng.uniform(-10, 10))
            b = P(rng.uniform(-10, 10), rng.uniform(-10, 10))
            ls.append(L.through(a, b))
        try:
            mc.solve_three_points_two_lines(pts, ls[0], ls[1])
        except mc.MinconicError:
            continue
        return pts, ls


def _bench(label: str, fn, reps: int) -> float:
    fn()  # warm
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    dt = (time.perf_counter() - t0) / reps
    print(f"  {label:<28s} {dt * 1e6:10.2f} us/call")
    return dt


def run(n: int, seed: int) -> None:
    results = {}
    for pure in (False, True):
        mc = _load_backend(pure)
        k = importlib.import_module("minconic._kernels")
        print(f"\nbackend: {mc.BACKEND}")
        rng = random.Random(seed)
        pts4, line = _random_4p1l(rng, mc)
        pts3, ls = _random_3p2l(rng, mc)
        vecs = [p.vec() for p in pts4]
        tri = k.diag_triangle(*vecs)[:3]
        timings = {}
        timings["diag_triangle"] = _bench(
            "diag_triangle", lambda: k.diag_triangle(*vecs), n
        )
        timings["conic_from_pencil"] = _bench(
            "conic_from_pencil", lambda: k.conic_from_pencil(*tri, 0.37), n
        )
        timings["sym_adjugate"] = _bench(
            "sym_adjugate",
            lambda: k.sym_adjugate(k.conic_from_pencil(*tri, 0.37)),
            n,
        )
        timings["solve_4p1l"] = _bench(
            "solve_four_points_line",
            lambda: mc.solve_four_points_line(pts4, line),
            max(n // 10, 1),
        )
        timings["solve_3p2l"] = _bench(
            "solve_three_points_two_lines",
            lambda: mc.solve_three_points_two_lines(pts3, ls[0], ls[1]),
            max(n // 10, 1),
        )
        results[mc.BACKEND] = timings

    if set(results) == {"c", "python"}:
        print("\nspeedup (python / c):")
        for key in results["c"]:
            ratio = results["python"][key] / results["c"][key]
            print(f"  {key:<28s} {ratio:6.2f}x")
    else:
        print("\ncompiled backend unavailable; ratios skipped")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20000, help="repetitions per kernel")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    run(args.n, args.seed)


if __name__ == "__main__":
    main()

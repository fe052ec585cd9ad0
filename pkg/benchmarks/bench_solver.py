"""Compare the compiled and pure-Python solver kernels.

Runs the exact solver on a few instances with each kernel, checks that both
return identical results, and prints the timings.

Usage: python benchmarks/bench_solver.py
"""

from __future__ import annotations

import time

from radiotree import exact_rn, gen_caterpillar, gen_levelwise, gen_path
from radiotree import _solver_py

try:
    from radiotree import _solver_core
except ImportError:
    _solver_core = None


def bench(label, tree):
    rows = []
    for name, kernel in (("pure-python", _solver_py), ("compiled", _solver_core)):
        if kernel is None:
            rows.append((name, None, None, None))
            continue
        t0 = time.perf_counter()
        res = exact_rn(tree, kernel=kernel)
        dt = time.perf_counter() - t0
        rows.append((name, res.rn, res.stats.nodes, dt))
    rns = {r[1] for r in rows if r[1] is not None}
    nodes = {r[2] for r in rows if r[2] is not None}
    assert len(rns) == 1 and len(nodes) == 1, f"kernel mismatch on {label}: {rows}"
    print(f"{label}  (rn={rows[0][1]}, nodes={rows[0][2]})")
    base = None
    for name, _, _, dt in rows:
        if dt is None:
            print(f"  {name:>12}: unavailable")
            continue
        speed = "" if base is None else f"  ({base / dt:.1f}x)"
        base = base or dt
        print(f"  {name:>12}: {dt:8.3f} s{speed}")


def main():
    cases = [
        ("P_9", gen_path(9).tree),
        ("P_10", gen_path(10).tree),
        ("C(5,1)", gen_caterpillar(5, 1).tree),
        ("C(6,1)", gen_caterpillar(6, 1).tree),
        ("T^2_{2,4}", gen_levelwise(2, (2, 4)).tree),
        ("P_11", gen_path(11).tree),
    ]
    for label, tree in cases:
        bench(label, tree)


if __name__ == "__main__":
    main()

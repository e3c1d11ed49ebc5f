"""Compare the compiled and pure-Python colouring-search kernels.

    python benchmarks/bench_kernel.py [--repeat N]

Each case is decided by both backends; verdicts and node counts must agree.
"""
from __future__ import annotations

import argparse
import sys
import time

from indramsey import kernel
from indramsey.arrow import decide_arrowing
from indramsey.expr import parse_graph
from indramsey.ramsey import hosts_of_order

CASES = [
    ("2K6", "K3", "2K3"),
    ("C7", "P4", "2K2"),
    ("2C7", "P5", "4K2"),
    ("K6", "K3", "K3"),
]


def _time(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernel.solve_c is None:
        print("compiled kernel not built; only the Python kernel is available", file=sys.stderr)
        return 1
    print(f"{'case':<28} {'nodes':>9} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for host, red, blue in CASES:
        f, g, h = parse_graph(host), parse_graph(red), parse_graph(blue)
        tc, vc = _time(lambda: decide_arrowing(f, g, h, solver=kernel.solve_c), args.repeat)
        tp, vp = _time(lambda: decide_arrowing(f, g, h, solver=kernel.solve_py), args.repeat)
        assert vc.outcome == vp.outcome and vc.stats.nodes == vp.stats.nodes, (host, red, blue)
        print(f"{host + ' -> ' + red + ',' + blue:<28} {vc.stats.nodes:>9} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.1f}x")
    # a whole order sweep: many small searches
    hosts = hosts_of_order(7)
    g, h = parse_graph("P3"), parse_graph("2P3")
    for name, solver in (("cython", kernel.solve_c), ("python", kernel.solve_py)):
        t0 = time.perf_counter()
        for x in hosts:
            decide_arrowing(x, g, h, solver=solver)
        print(f"order-7 sweep for (P3, 2P3), {name}: {time.perf_counter() - t0:.2f}s over {len(hosts)} hosts")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled kernels with their pure-Python twins.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run through both backends on identical inputs; the outputs
are compared before the timings are printed.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hopfforge import _kernels_py as pure
from hopfforge.homology import ChainComplex
from hopfforge.recognition import HasseDiagram
from hopfforge.symmetry import expand_permcycle

try:
    from hopfforge import _kernels as compiled
except ImportError:
    compiled = None


def _gf2_workload():
    chain = ChainComplex(expand_permcycle([1, 2, 4, 8, 16]))
    return "gf2_reduce (4-torus, all dimensions)", [(chain.boundary_columns(k), chain.size(k - 1), None)
                                                    for k in range(1, chain.dim + 1)]


def _morse_workload():
    h = HasseDiagram(expand_permcycle([1, 2, 4, 8]))
    protected = np.zeros(len(h.faces), dtype=np.uint8)
    return "morse_run (3-torus, 10 seeds)", (h.dims, h.face_ptr, h.face_idx, h.coface_ptr, h.coface_idx, protected)


def _incoherence_workload(ncubes: int):
    from hopfforge.constructions.cubes import rp4_cube_data

    data = rp4_cube_data()
    return f"incoherence_counts (2^{ncubes} masks)", (data.square_rows(), ncubes)


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--cubes", type=int, default=14, help="mirror flags enumerated in the incoherence workload")
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; only the pure backend is available")

    name, gargs = _gf2_workload()
    rows = [(name, lambda m: [m.gf2_reduce(*g) for g in gargs],
             lambda a, b: all(np.array_equal(x, y) for x, y in zip(a, b)))]
    name, margs = _morse_workload()
    rows.append((name, lambda m: [m.morse_run(*margs, s) for s in range(10)], lambda a, b: list(map(tuple, a)) == list(map(tuple, b))))
    name, iargs = _incoherence_workload(args.cubes)
    rows.append((name, lambda m: m.incoherence_counts(*iargs), lambda a, b: np.array_equal(np.asarray(a), np.asarray(b))))

    print(f"{'workload':45s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, run, same in rows:
        tp = _time(lambda: run(pure), args.repeat)
        if compiled is None:
            print(f"{name:45s} {tp:10.4f} {'-':>11s} {'-':>8s}")
            continue
        if not same(run(pure), run(compiled)):
            raise SystemExit(f"{name}: backends disagree")
        tc = _time(lambda: run(compiled), args.repeat)
        print(f"{name:45s} {tp:10.4f} {tc:11.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()

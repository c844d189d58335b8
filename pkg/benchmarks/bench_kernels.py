#!/usr/bin/env python3
"""Benchmark the compiled conflict-coloring kernel against the pure-Python
fallback on the exact oracle's dominant workload.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from halinbook import _kernels, exact_mbt, make_halin, random_halin, wheel
from halinbook._kernels import _pykernel


def cases():
    yield "W_7 (wheel, 7 vertices)", wheel(7).graph()
    yield "W_8 (wheel, 8 vertices)", wheel(8).graph()
    prism = make_halin([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], [2, 4, 5, 3])
    yield "prism (cubic, 6 vertices)", prism.graph()
    caterpillar = make_halin(
        [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7)], [3, 4, 5, 6, 7]
    )
    yield "caterpillar (cubic, 8 vertices)", caterpillar.graph()
    yield "random Halin (9 vertices)", random_halin(2, 5, seed=13).graph()


def bench(kernel, g, repeat: int) -> tuple[float, int]:
    best = float("inf")
    value = -1
    for _ in range(repeat):
        start = time.perf_counter()
        value, _witness = exact_mbt(g, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best, value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    kernels = _kernels.available()
    compiled = kernels.get("compiled")
    if compiled is None:
        print("compiled kernel not built; timing the Python kernel only")

    header = f"{'instance':<34} {'python':>12}"
    if compiled is not None:
        header += f" {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, g in cases():
        t_py, v_py = bench(_pykernel, g, args.repeat)
        row = f"{name:<34} {t_py * 1000:>10.2f}ms"
        if compiled is not None:
            t_c, v_c = bench(compiled, g, args.repeat)
            assert v_py == v_c, f"backend disagreement on {name}: {v_py} vs {v_c}"
            row += f" {t_c * 1000:>10.2f}ms {t_py / t_c:>8.1f}x"
        print(f"{row}   (mbt={v_py})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

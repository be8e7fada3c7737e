"""Time the numba and numpy oracle kernels on a few fixed rules.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from lcaexp.matpoly import LaMatrix
from lcaexp.oracle import falsify, verify_window

RULES = {
    "spread Z/2 n=2": LaMatrix.from_strings([["0", "1"], ["X + X^-1", "0"]], 2),
    "mixed Z/3 n=2": LaMatrix.from_strings([["X + X^-1", "1"], ["X^-1", "2X"]], 3),
    "shift Z/2 n=2": LaMatrix.from_strings([["X", "0"], ["0", "X"]], 2),
    "radius-2 Z/2 n=1": LaMatrix.from_strings([["X^-2 + X + X^2"]], 2),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--lhat", type=int, default=8)
    ap.add_argument("--width", type=int, default=4)
    ap.add_argument("--steps", type=int, default=16)
    args = ap.parse_args()

    # compile (or load cached) numba kernels before timing
    for A in RULES.values():
        verify_window(A, 2, backend="numba")
        falsify(A, 2, 2, backend="numba")

    print(f"{'rule':<20} {'kernel':<8} {'numba s':>9} {'numpy s':>9} {'speedup':>8}  agree")
    for name, A in RULES.items():
        for kernel, call in (
            ("verify", lambda b: verify_window(A, args.lhat, backend=b)),
            ("falsify", lambda b: falsify(A, args.width, args.steps, backend=b)),
        ):
            t_nb, r_nb = best_of(lambda: call("numba"), args.repeat)
            t_np, r_np = best_of(lambda: call("numpy"), args.repeat)
            print(
                f"{name:<20} {kernel:<8} {t_nb:9.4f} {t_np:9.4f} {t_np / max(t_nb, 1e-9):7.1f}x  {r_nb == r_np}"
            )


if __name__ == "__main__":
    main()

"""Time the Bruhat-matrix and KL-table kernels for each available backend.

    python3 benchmarks/bench_kernel.py [--lengths 10 12 14 16] [--repeat 3]
"""
import argparse
import time

import numpy as np

from kla2 import kernel
from kla2.hecke import KLTable


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--lengths", type=int, nargs="+", default=[10, 12, 14, 16])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backs = kernel.backends()
    print(f"default backend: {kernel.BACKEND}; available: {', '.join(backs)}")
    print(f"{'len':>4} {'elements':>9} {'backend':>8} {'bruhat s':>10} {'kl s':>10} {'speedup':>8}")
    for n in args.lengths:
        shape = KLTable(n, _arrays=(None, None))
        ref = None
        base = None
        for name, impl in backs.items():
            tb, bruhat = best_of(lambda: impl.bruhat_matrix(shape.lengths, shape.lmul, shape.ldesc), args.repeat)
            tk, coeffs = best_of(
                lambda: impl.kl_coefficients(shape.lengths, shape.lmul, shape.ldesc, bruhat, shape.depth),
                args.repeat,
            )
            if ref is None:
                ref, base = (bruhat, coeffs), tb + tk
            elif not (np.array_equal(ref[0], bruhat) and np.array_equal(ref[1], coeffs)):
                raise SystemExit(f"backends disagree at length {n}")
            speed = base / (tb + tk)
            print(f"{n:>4} {len(shape.elements):>9} {name:>8} {tb:>10.4f} {tk:>10.4f} {speed:>7.1f}x")


if __name__ == "__main__":
    main()

"""Time the compiled kernels against the pure-Python fallback.

Runs the dense Jacobi solver and the tridiagonal bisection solver at a few
orders with both backends and prints a table with the speedup. The compiled
column is skipped when the extension is not built.

    python benchmarks/compare_backends.py [--repeats N] [--orders 60,120,240]
"""
import argparse
import time

import numpy as np

from aspec import _kernels_py

try:
    from aspec import _kernels as _compiled
except ImportError:
    _compiled = None


def _best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _dense_case(rng, n):
    m = rng.standard_normal((n, n))
    return (m + m.T) / 2.0


def _tridiag_case(rng, n):
    d = rng.standard_normal(n) * 3.0
    e = rng.standard_normal(n - 1) * 2.0
    rad = np.zeros(n)
    rad[:-1] += np.abs(e)
    rad[1:] += np.abs(e)
    lo = float((d - rad).min()) - 1.0
    hi = float((d + rad).max()) + 1.0
    return d, e, lo, hi


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--orders", default="60,120,240")
    args = ap.parse_args()
    orders = [int(s) for s in args.orders.split(",")]
    rng = np.random.default_rng(42)

    rows = []
    for n in orders:
        a = _dense_case(rng, n)
        py = _best_of(args.repeats, lambda: _kernels_py.jacobi_eigenvalues(a.copy(), 1e-12))
        if _compiled is not None:
            cc = _best_of(args.repeats, lambda: _compiled.jacobi_eigenvalues(a.copy(), 1e-12))
        else:
            cc = None
        rows.append((f"jacobi n={n}", py, cc))

    for n in orders:
        d, e, lo, hi = _tridiag_case(rng, n)
        py = _best_of(
            args.repeats, lambda: _kernels_py.bisect_eigenvalues(d, e, lo, hi, 1e-12)
        )
        if _compiled is not None:
            cc = _best_of(
                args.repeats, lambda: _compiled.bisect_eigenvalues(d, e, lo, hi, 1e-12)
            )
        else:
            cc = None
        rows.append((f"bisect n={n}", py, cc))

    print(f"{'kernel':<14} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for name, py, cc in rows:
        if cc is None:
            print(f"{name:<14} {py * 1e3:>10.2f}ms {'-':>12} {'-':>9}")
        else:
            print(f"{name:<14} {py * 1e3:>10.2f}ms {cc * 1e3:>10.2f}ms {py / cc:>8.1f}x")
    if _compiled is None:
        print("compiled extension not built; only the fallback was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

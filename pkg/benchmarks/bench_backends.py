"""Benchmark the compiled kernels against the pure-numpy fallback.

Usage:
    python benchmarks/bench_backends.py [--repeats 3] [--grid 2000] [--panels 1000000]

Times the three hot kernels on every importable backend and prints one table
row per (kernel, backend), plus the cross-backend value agreement so a speed
win is never hiding a numerical divergence.
"""

from __future__ import annotations

import argparse
import time

from hilbertnorm.backend import available_backends


def best_of(repeats, fn, *args, **kwargs):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args, **kwargs)
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--grid", type=int, default=2000, help="polar grid side for sup_F_polar")
    parser.add_argument("--panels", type=int, default=10**6, help="midpoint panels per sub-integral")
    parser.add_argument("--step", type=float, default=1e-6, help="grid step for sup_G_grid")
    args = parser.parse_args()

    backends = available_backends()
    if len(backends) < 2:
        print(f"note: only the {list(backends)[0]} backend is importable")

    cases = [
        ("sup_F_polar(0.8, 0.1)", "sup_F_polar", (0.8, 0.1, args.grid, args.grid), {}),
        ("tt_norm_upper_midpoint(0.8)", "tt_norm_upper_midpoint", (0.8, args.panels), {}),
        ("tt_norm_upper_midpoint(0.4)", "tt_norm_upper_midpoint", (0.4, args.panels), {}),
        ("sup_G_grid(0.8, 0.1)", "sup_G_grid", (0.8, 0.1, args.step), {}),
    ]

    print(f"{'kernel':<34} {'backend':<10} {'best of ' + str(args.repeats):>12}   value")
    print("-" * 84)
    for label, fn_name, fargs, fkwargs in cases:
        values = {}
        for name, mod in sorted(backends.items()):
            elapsed, value = best_of(args.repeats, getattr(mod, fn_name), *fargs, **fkwargs)
            values[name] = value
            shown = value if not isinstance(value, tuple) else value[1]
            print(f"{label:<34} {name:<10} {elapsed:>10.4f}s   {shown:.12g}")
        if len(values) == 2:
            a, b = values["python"], values["compiled"]
            if isinstance(a, tuple):
                a, b = a[1], b[1]
            print(f"{'':<34} {'agree':<10} {'':>12}   |diff| = {abs(a - b):.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Benchmark the compiled elimination kernels against the pure-Python twins.

Run after an editable install:

    python3 benchmarks/bench_kernels.py

Covers the two hot paths (modular Gauss-Jordan; fraction-free integer
Gauss-Jordan) plus one end-to-end workload (the dimension-16 doubling-chain
twist-space solve, which reduces a 65,536 x 256 system).
"""

import random
import time

from homalg import _pykernels

try:
    from homalg import _speedups
except ImportError:
    _speedups = None


def _bench(label, fn_fast, fn_pure, data_maker, repeats=3):
    times = {}
    for name, fn in (("compiled", fn_fast), ("pure", fn_pure)):
        if fn is None:
            continue
        best = None
        for _ in range(repeats):
            args = data_maker()
            t0 = time.perf_counter()
            fn(*args)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        times[name] = best
    pure = times.get("pure")
    fast = times.get("compiled")
    line = f"{label:34s} pure {pure * 1e3:9.2f} ms"
    if fast is not None:
        line += f"   compiled {fast * 1e3:9.2f} ms   speedup {pure / fast:6.1f}x"
    print(line)


def fp_data(nrows, ncols, p, seed=0):
    rng = random.Random(seed)

    def make():
        return [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)], p

    return make


def int_data(nrows, ncols, bound, seed=0):
    rng = random.Random(seed)

    def make():
        return ([[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)],)

    return make


def twist_solve():
    import os

    os.environ.pop("HOMALG_PURE_PYTHON", None)
    from homalg.constructions import cayley_dickson_chain
    from homalg.homstruct import twist_space

    t0 = time.perf_counter()
    chain = cayley_dickson_chain(4)
    ts = twist_space(chain[4].base)
    dt = time.perf_counter() - t0
    print(f"{'sedenion twist solve (end-to-end)':34s} {dt:9.2f} s   dim {ts.dim}")


def main():
    if _speedups is None:
        print("compiled backend not available; showing pure-only timings")
    fast_fp = _speedups.rref_fp if _speedups else None
    fast_int = _speedups.rref_int if _speedups else None
    _bench(
        "rref_fp 400x60, p=65521",
        fast_fp,
        _pykernels.rref_fp,
        fp_data(400, 60, 65521),
    )
    _bench(
        "rref_fp 200x200, p=2",
        fast_fp,
        _pykernels.rref_fp,
        fp_data(200, 200, 2),
    )
    _bench(
        "rref_int 200x40, |entries|<=9",
        fast_int,
        _pykernels.rref_int,
        int_data(200, 40, 9),
    )
    _bench(
        "rref_int 60x60, |entries|<=999",
        fast_int,
        _pykernels.rref_int,
        int_data(60, 60, 999),
    )
    twist_solve()


if __name__ == "__main__":
    main()

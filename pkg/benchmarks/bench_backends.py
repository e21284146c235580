#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-Python fallback.

The hot paths in a sweep are scalar profile evaluation and the adaptive
Simpson quadratures behind the region decomposition; the spectrum roots and
the banded BVP solve are negligible by comparison.  Run after an editable
install:

    python benchmarks/bench_backends.py
"""
import math
import time

from shellpol.backend import available_backends
from shellpol import Coupling, ground_state

GAMMAS = (1.5, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0)


def setup(K, ga):
    s0 = ground_state(Coupling(-ga))
    x = s0.x
    n0h = K.n0hat(x)
    ntil = n0h / K.SQRT_4PI
    return x, -ga, ntil, K.c_scaled(x, -ga, ntil), K.d_scaled(x, -ga, ntil), n0h


def bench_profile_eval(K):
    total = 0.0
    for ga in GAMMAS:
        x, gam, ntil, cs, ds, n0h = setup(K, ga)
        for i in range(2000):
            rho = 3.0 * (i + 0.5) / 2000
            total += K.s_eval(rho, x, gam, ntil, cs, ds)
            total += K.q0_eval(rho, x, n0h)
    return total


def bench_alpha_quadrature(K):
    total = 0.0
    for ga in GAMMAS:
        x, gam, ntil, cs, ds, n0h = setup(K, ga)
        args = (x, gam, ntil, cs, ds, n0h)
        total += K.integrate(0, 0.0, 1.0, 1e-10, *args)
        total += K.integrate(0, 1.0, 1.0 + 40.0 / x, 1e-10, *args)
    return total


def bench_normalization(K):
    total = 0.0
    for ga in GAMMAS:
        x, gam, ntil, cs, ds, n0h = setup(K, ga)
        total += K.integrate(1, 0.0, 1.0, 1e-10, x, n0h)
        total += K.integrate(1, 1.0, 1.0 + 40.0 / x, 1e-10, x, n0h)
    return total


BENCHES = [
    ("scalar profile eval (28k calls)", bench_profile_eval),
    ("alpha region quadratures", bench_alpha_quadrature),
    ("normalization quadratures", bench_normalization),
]


def timeit(fn, arg, repeats=5):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    print(f"{'benchmark':<36} " + " ".join(f"{n:>12}" for n in backends)
          + "   speedup")
    for name, fn in BENCHES:
        times = {n: timeit(fn, K) for n, K in backends.items()}
        cols = " ".join(f"{times[n] * 1e3:>10.2f}ms" for n in backends)
        if "cython" in times and "python" in times:
            ratio = f"{times['python'] / times['cython']:>8.1f}x"
        else:
            ratio = "     n/a"
        print(f"{name:<36} {cols}  {ratio}")
    # cross-backend value agreement on the biggest quadrature
    vals = {n: bench_alpha_quadrature(K) for n, K in backends.items()}
    ref = next(iter(vals.values()))
    drift = max(abs(v - ref) / abs(ref) for v in vals.values())
    print(f"cross-backend value drift: {drift:.2e}")


if __name__ == "__main__":
    main()

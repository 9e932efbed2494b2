#!/usr/bin/env python3
"""Benchmark the representability-scan kernels: numba vs pure numpy.

Times the classification of all primes up to --limit for the given
dimension g (scan modulus n = 2g+1), after a warm-up call so the numba
timing excludes JIT compilation. Verifies both backends agree before
reporting.

Usage:
    python3 benchmarks/bench_kernels.py --limit 1000000 --g 11 --repeat 5
"""

import argparse
import statistics
import time

import numpy as np

from weilcert import kernels
from weilcert.arith import sieve_primes


def time_backend(fn, primes, n, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(primes, n)
        times.append(time.perf_counter() - t0)
    return times


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10**6)
    ap.add_argument("--g", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    n = 2 * args.g + 1
    t0 = time.perf_counter()
    primes = sieve_primes(args.limit).primes
    print(f"sieve to {args.limit:,}: {time.perf_counter() - t0:.3f}s "
          f"({len(primes):,} primes), n = {n}")

    flags_numpy = kernels.representable_flags_numpy(primes, n)
    results = {}
    results["numpy"] = time_backend(
        kernels.representable_flags_numpy, primes, n, args.repeat
    )

    if kernels.HAVE_NUMBA:
        flags_numba = kernels.representable_flags_numba(primes, n)  # warm-up
        assert np.array_equal(flags_numba, flags_numpy), "backend mismatch"
        results["numba"] = time_backend(
            kernels.representable_flags_numba, primes, n, args.repeat
        )
    else:
        print("numba not importable; numpy only")

    print(f"\n{'backend':<8} {'best':>9} {'median':>9} {'mean':>9}")
    for name, times in results.items():
        print(
            f"{name:<8} {min(times) * 1e3:>8.2f}ms "
            f"{statistics.median(times) * 1e3:>8.2f}ms "
            f"{statistics.mean(times) * 1e3:>8.2f}ms"
        )
    if "numba" in results:
        speedup = statistics.median(results["numpy"]) / statistics.median(
            results["numba"]
        )
        print(f"\nnumba speedup over numpy: {speedup:.2f}x")
    print(f"members found: {int(flags_numpy.sum()):,}")


if __name__ == "__main__":
    main()

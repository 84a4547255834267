"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py --primes 5..199
    python benchmarks/bench_kernels.py --primes 1000..1500 --repeat 1
"""

import argparse
import time

from supercong import _kernels_py, kernels
from supercong.arith import primes_between
from supercong.congruences import CONGRUENCES
from supercong.engine import run_suite

try:
    from supercong import _kernels as _compiled
except ImportError:
    _compiled = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def bench_kernel(impl, primes, e, repeat):
    def run():
        for p in primes:
            impl.convolution_mod(p, e, p)
    return best_of(run, repeat)


def bench_suite(primes, repeat, compiled):
    saved = kernels._compiled
    kernels._compiled = _compiled if compiled else None
    try:
        return best_of(lambda: run_suite(primes, sorted(CONGRUENCES)), repeat)
    finally:
        kernels._compiled = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", default="5..199", metavar="LO..HI")
    parser.add_argument("--exponent", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--no-suite", action="store_true", help="only time the convolution kernel")
    args = parser.parse_args()
    lo, hi = (int(v) for v in args.primes.split(".."))
    primes = primes_between(lo, hi)
    print(f"{len(primes)} primes in {lo}..{hi}, modulus p^{args.exponent}")
    if _compiled is None:
        print("compiled kernels are not built; only the pure-Python path is timed")

    py = bench_kernel(_kernels_py, primes, args.exponent, args.repeat)
    print(f"convolution_mod  python   {py:9.4f}s")
    if _compiled is not None:
        c = bench_kernel(_compiled, primes, args.exponent, args.repeat)
        print(f"convolution_mod  compiled {c:9.4f}s  ({py / c:.1f}x)")

    if not args.no_suite:
        py = bench_suite(primes, args.repeat, compiled=False)
        print(f"congruence suite python   {py:9.4f}s")
        if _compiled is not None:
            c = bench_suite(primes, args.repeat, compiled=True)
            print(f"congruence suite compiled {c:9.4f}s  ({py / c:.1f}x)")


if __name__ == "__main__":
    main()

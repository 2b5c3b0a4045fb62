"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot functions (mul, eval_scaled, chain_variations) on
representative workloads: dense integer polynomial products, scaled
integer evaluation at a rational point, and sign-variation counts over a
Sturm chain.  Run from the repository root::

    python3 benchmarks/bench_kernel.py

If the extension is not built, only the pure backend is timed.
"""

import argparse
import statistics
import timeit
from fractions import Fraction

from fibtype._kernel import _pure
from fibtype.families import gee
from fibtype.roots import sturm_chain

try:
    from fibtype._kernel import _core
except ImportError:
    _core = None


def _workloads():
    big = gee(3, 30)  # degree ~88, mixed-size integer coefficients
    small = gee(2, 8)
    a = list(big.coeffs)
    b = list(small.coeffs)
    chain = [list(p.coeffs) for p in sturm_chain(gee(2, 20))]
    point = Fraction(45, 32)  # near the maximal root, worst case for signs
    p, q = point.numerator, point.denominator
    return {
        "mul(deg 88 x deg 16)": lambda impl: impl.mul(a, b),
        "eval_scaled(deg 88)": lambda impl: impl.eval_scaled(a, p, q),
        "chain_variations(G_20^(2))": lambda impl: impl.chain_variations(chain, p, q),
    }


def _time(fn, repeat, number):
    runs = timeit.repeat(fn, repeat=repeat, number=number)
    return min(runs) / number, statistics.median(runs) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=200)
    args = parser.parse_args()

    backends = [("pure", _pure)]
    if _core is not None:
        backends.append(("cython", _core))

    print(f"{'workload':32} {'backend':8} {'best (us)':>10} {'median (us)':>12}")
    for name, work in _workloads().items():
        best = {}
        for label, impl in backends:
            lo, med = _time(lambda: work(impl), args.repeat, args.number)
            best[label] = lo
            print(f"{name:32} {label:8} {lo * 1e6:10.2f} {med * 1e6:12.2f}")
        if len(best) == 2:
            print(f"{name:32} {'speedup':8} {best['pure'] / best['cython']:10.2f}x")


if __name__ == "__main__":
    main()

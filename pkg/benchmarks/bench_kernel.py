"""Benchmark the echelon-insertion kernels on a V[X]-saturation stress run.

Compares the compiled extension, the pure-Python kernel twin and the fully
generic DomainElement path on identical random instances, checking that all
three produce identical results.  Usage:

    python benchmarks/bench_kernel.py [--n 4] [--m 4] [--deg 6] [--reps 3]
"""

import argparse
import random
import statistics
import time
from fractions import Fraction

from valsat import _ratkernel
from valsat._engines import GenericEngine
from valsat._packed import PackedEngine
from valsat.polyvec import PolyVec
from valsat.valuation import Zp
from valsat.vxsat import _run

try:
    from valsat import _speedups
except ImportError:
    _speedups = None


def make_instance(seed, n, m, deg, p=2):
    rng = random.Random(seed)
    dom = Zp(p)
    S = []
    while len(S) < m:
        comps = [
            [Fraction(rng.randrange(-999, 1000), rng.choice((1, 3, 5, 7)))
             * p ** rng.randrange(0, 4)
             for _ in range(rng.randrange(1, deg + 2))]
            for _ in range(n)
        ]
        v = PolyVec.from_raw(dom, comps)
        if not v.is_zero():
            S.append(v)
    return dom, S


def time_engine(make_engine, dom, S, reps):
    times = []
    result = None
    for _ in range(reps):
        t0 = time.perf_counter()
        result = _run(make_engine(dom), S, 64)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.mean(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--m", type=int, default=4)
    ap.add_argument("--deg", type=int, default=6)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    dom, S = make_instance(args.seed, args.n, args.m, args.deg)
    print(f"instance: Z_({dom.p}), n={args.n}, m={args.m}, deg={args.deg}, "
          f"reps={args.reps}")

    rows = []
    baseline = None
    engines = [("generic", lambda d: GenericEngine(d)),
               ("packed pure", lambda d: PackedEngine(d, kernel=_ratkernel))]
    if _speedups is not None:
        engines.append(("packed compiled", lambda d: PackedEngine(d, kernel=_speedups)))

    results = []
    for name, make in engines:
        best, mean, res = time_engine(make, dom, S, args.reps)
        if baseline is None:
            baseline = best
        rows.append((name, best, mean, baseline / best))
        results.append(res)

    first = results[0]
    for res in results[1:]:
        assert list(res.basis) == list(first.basis)
        assert res.generators == first.generators
        assert res.trace == first.trace
    rounds = first.trace[-1].k
    print(f"rounds: {rounds}, basis columns: {len(first.basis)}, "
          f"generators: {len(first.generators)}")
    print(f"{'engine':<16} {'best (s)':>10} {'mean (s)':>10} {'speedup':>8}")
    for name, best, mean, speed in rows:
        print(f"{name:<16} {best:>10.4f} {mean:>10.4f} {speed:>7.2f}x")
    if _speedups is None:
        print("note: compiled extension not built; showing pure kernel only")


if __name__ == "__main__":
    main()

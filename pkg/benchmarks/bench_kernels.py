"""Closure timing for the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--sig 2x3x5] [--repeat 3]
"""

import argparse
import time

from wreathlab import _pykernels
from wreathlab.generators import directed_generator, rooted_generator
from wreathlab.literals import parse_signature

try:
    from wreathlab import _kernels
except ImportError:
    _kernels = None


def bench(mod, sig, gens, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        size = len(mod.closure(sig.layout, gens, 10**7))
        best = min(best, time.perf_counter() - t0)
    return size, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sig", default="2x3x5")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sig = parse_signature(args.sig)
    gens = [list(rooted_generator(sig).flat), list(directed_generator(sig).flat)]
    size, py = bench(_pykernels, sig, gens, args.repeat)
    print(f"signature {sig}: closure {size}")
    print(f"python  {py:8.3f}s")
    if _kernels is None:
        print("cython  (extension not built)")
        return
    size_c, cy = bench(_kernels, sig, gens, args.repeat)
    assert size_c == size
    print(f"cython  {cy:8.3f}s  ({py / cy:.1f}x)")


if __name__ == "__main__":
    main()

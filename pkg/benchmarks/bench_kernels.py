"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--n-max 10] [--repeat 3]

For each n the instance is the cycle C_n with g = f = 2, which has a
fractional factor, so both scans run to completion (3**n pairs for the
all-pairs scan, 2**n sets for the canonical scan).
"""

import argparse
import time

from fracfactor.graph import Graph
from fracfactor.kernels import available_backends, load_backend


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {name: load_backend(name) for name in available_backends()}
    print(f"backends: {', '.join(backends)}")
    header = f"{'n':>3} {'kernel':<10}" + "".join(f"{name + ' (s)':>14}" for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in range(args.n_min, args.n_max + 1):
        G = Graph.cycle(n)
        zero = (0,) * n
        two = (2,) * n
        for kernel in ("scan_pairs", "scan_min_t"):
            times = {}
            results = set()
            for name, mod in backends.items():
                fn = getattr(mod, kernel)
                results.add(fn(n, G.adjacency_masks, zero, two, two))
                times[name] = best_of(lambda: fn(n, G.adjacency_masks, zero, two, two),
                                      args.repeat)
            assert len(results) == 1, f"backends disagree at n={n} for {kernel}"
            row = f"{n:>3} {kernel:<10}" + "".join(f"{t:>14.6f}" for t in times.values())
            if len(times) == 2:
                row += f"{times['python'] / max(times['cython'], 1e-9):>9.0f}x"
            print(row)


if __name__ == "__main__":
    main()

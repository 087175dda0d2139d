"""Benchmark the compiled kernels against the numpy fallbacks.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Both backends are imported directly (no env-var juggling), timed with
timeit, and cross-checked for agreement before reporting.
"""

import argparse
import timeit

import numpy as np

from pcrank import _kernels_py

try:
    from pcrank import _speedups
except ImportError:
    _speedups = None


def random_log_matrix(rng, n):
    logs = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    vals = rng.uniform(-3, 3, len(iu[0]))
    logs[iu] = vals
    logs[iu[1], iu[0]] = -vals
    return logs


def bench(label, fn, args, repeat=5, number=None):
    timer = timeit.Timer(lambda: fn(*args))
    if number is None:
        number, _ = timer.autorange()
    best = min(timer.repeat(repeat=repeat, number=number)) / number
    print(f"  {label:14s} {best * 1e3:10.3f} ms/call  ({number} calls/rep)")
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--triad-sizes", type=int, nargs="+", default=[20, 50, 100])
    parser.add_argument("--loci-sizes", type=int, nargs="+", default=[5, 6, 7])
    args = parser.parse_args()

    if _speedups is None:
        print("compiled backend not built; showing pure-python timings only")

    rng = np.random.default_rng(0)
    print("triad_stats (max |residual| and sum of squares over all triads)")
    for n in args.triad_sizes:
        logs = random_log_matrix(rng, n)
        print(f" n={n} ({n * (n - 1) * (n - 2) // 6} triads)")
        t_py = bench("pure-python", _kernels_py.triad_stats, (logs,))
        if _speedups is not None:
            assert np.allclose(_speedups.triad_stats(logs), _kernels_py.triad_stats(logs))
            t_c = bench("compiled", _speedups.triad_stats, (logs,))
            print(f"  speedup        {t_py / t_c:10.1f}x")

    print("count_admissible (exhaustive scan of all 2^(n(n-1)/2) sign patterns)")
    for n in args.loci_sizes:
        print(f" n={n} ({2 ** (n * (n - 1) // 2)} patterns)")
        t_py = bench("pure-python", _kernels_py.count_admissible, (n,), number=1)
        if _speedups is not None:
            assert _speedups.count_admissible(n) == _kernels_py.count_admissible(n)
            t_c = bench("compiled", _speedups.count_admissible, (n,), number=1)
            print(f"  speedup        {t_py / t_c:10.1f}x")


if __name__ == "__main__":
    main()

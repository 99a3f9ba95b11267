"""Time the compiled cover-search kernel against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from snakedimers import _pykernels
from snakedimers.enumeration import _index
from snakedimers.snake import build_snake

try:
    from snakedimers import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ((1, 1, 1, 1, 1, 1, 1, 1), 3),
    ((2, 4, 1, 2), 4),
    ((1, 2, 1, 1, 3, 1), 4),
    ((3, 3, 3), 5),
    ((1,) * 12, 2),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernel not built; only the Python fallback is available")
    print(f"{'cf':<28}{'m':>3}{'covers':>12}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for cf, m in CASES:
        verts, _, eu, ev = _index(build_snake(cf))
        n = len(verts)
        tp, cp = best_of(lambda: _pykernels.count_covers(n, eu, ev, m), args.repeat)
        if _ckernels is not None:
            tc, cc = best_of(lambda: _ckernels.count_covers(n, eu, ev, m), args.repeat)
            assert cc == cp, (cf, m, cc, cp)
            extra = f"{tc:>12.5f}{tp / tc:>9.1f}x"
        else:
            extra = f"{'-':>12}{'-':>10}"
        label = ",".join(map(str, cf))
        print(f"{label:<28}{m:>3}{cp:>12}{tp:>12.5f}{extra}")


if __name__ == "__main__":
    main()

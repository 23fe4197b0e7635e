"""Compare the compiled search kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--rows 2 --cols 3] [--repeat 3]

Both backends run the same enumeration (every grid, genus-0 blank
pairings, knots only) and must produce identical output.
"""
import argparse
import time

from vmosaic import _core_py
from vmosaic.search import BLANK_NONCROSSING

try:
    from vmosaic import _core as _core_cy
except ImportError:
    _core_cy = None


def workload(core, m, n):
    rows = []
    for grid in core.iter_grids(m, n, 0, -1, ()):
        for partner, comps, code, v in core.grid_mosaics(m, n, grid, BLANK_NONCROSSING, True):
            rows.append((tuple(grid), tuple(partner), tuple(core.canonical_key(code)), v))
    return rows


def best_time(core, m, n, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = workload(core, m, n)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=2)
    ap.add_argument("--cols", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    t_py, out_py = best_time(_core_py, args.rows, args.cols, args.repeat)
    print(f"pure-python  {t_py:8.3f}s  {len(out_py)} mosaics")
    if _core_cy is None:
        print("compiled     unavailable (build with Cython to compare)")
        return
    t_cy, out_cy = best_time(_core_cy, args.rows, args.cols, args.repeat)
    print(f"compiled     {t_cy:8.3f}s  {len(out_cy)} mosaics")
    print(f"speedup      {t_py / t_cy:8.1f}x  outputs {'identical' if out_py == out_cy else 'DIFFER'}")


if __name__ == "__main__":
    main()

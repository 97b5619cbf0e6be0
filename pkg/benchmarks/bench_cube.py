"""Benchmark the compiled cube kernel against its pure-Python twin.

The workload is the all-states circle count of (2,n) torus diagrams,
which is the hot inner loop of every full-cube computation.

    python benchmarks/bench_cube.py --min-n 10 --max-n 18
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tools"))

from diagen import braid_closure  # noqa: E402
from exkh import _cubecore_py  # noqa: E402
from exkh.diagram import link_diagram  # noqa: E402
from exkh.resolution import _join_arrays  # noqa: E402

try:
    from exkh import _cubecore
except ImportError:
    _cubecore = None


def time_once(fn, *args) -> float:
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=10)
    parser.add_argument("--max-n", type=int, default=18)
    parser.add_argument(
        "--python-cap",
        type=int,
        default=16,
        help="skip the pure-Python kernel above this crossing count",
    )
    args = parser.parse_args()

    if _cubecore is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    print(f"{'n':>4} {'states':>10} {'compiled':>12} {'python':>12} {'speedup':>8}")
    for n in range(args.min_n, args.max_n + 1):
        d = link_diagram(braid_closure([-1] * n))
        m, j0, j1 = _join_arrays(d)
        t_c = time_once(_cubecore.circle_counts_all, n, m, j0, j1) if _cubecore else None
        t_p = (
            time_once(_cubecore_py.circle_counts_all, n, m, j0, j1)
            if n <= args.python_cap
            else None
        )
        cell = lambda t: f"{t * 1000:10.1f}ms" if t is not None else f"{'-':>12}"
        speed = f"{t_p / t_c:7.1f}x" if (t_c and t_p) else f"{'-':>8}"
        print(f"{n:>4} {1 << n:>10} {cell(t_c)} {cell(t_p)} {speed}")


if __name__ == "__main__":
    main()

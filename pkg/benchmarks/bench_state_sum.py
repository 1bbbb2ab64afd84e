"""Compare the numba and pure-numpy circle-count kernels.

    python3 benchmarks/bench_state_sum.py [--min-n 10] [--max-n 18] [--repeat 3]

Diagrams come from braided forms of bundled table knots, so crossing numbers
above 10 are available.  Both kernels must return identical counts.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from knotslope import _kernels
from knotslope.seifert import braided
from knotslope.table import load_bundled_table
from knotslope.diagram import build_diagram


def diagrams_by_size(min_n: int, max_n: int) -> dict[int, object]:
    found = {}
    for e in load_bundled_table():
        if e.code is None:
            continue
        for d in (build_diagram(e.code), braided(build_diagram(e.code))):
            if min_n <= d.n <= max_n and d.n not in found:
                found[d.n] = d
    return dict(sorted(found.items()))


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=10)
    ap.add_argument("--max-n", type=int, default=18)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'n':>3} {'states':>8} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    for n, d in diagrams_by_size(args.min_n, args.max_n).items():
        partner = np.asarray(d.partner, dtype=np.int64)
        hi = 1 << n
        _kernels._circle_counts_jit(partner, n, 0, min(hi, 8))  # compile outside the timing
        fast = _kernels._circle_counts_jit(partner, n, 0, hi)
        slow = np.concatenate([_kernels.circle_counts_numpy(partner, n, a, min(a + 4096, hi))
                               for a in range(0, hi, 4096)])
        if not np.array_equal(fast, slow):
            raise SystemExit(f"kernels disagree on a {n}-crossing diagram")
        t_jit = best_of(lambda: _kernels._circle_counts_jit(partner, n, 0, hi), args.repeat)
        t_np = best_of(lambda: [_kernels.circle_counts_numpy(partner, n, a, min(a + 4096, hi))
                                for a in range(0, hi, 4096)], args.repeat)
        print(f"{n:>3} {hi:>8} {t_jit:>9.4f} {t_np:>9.4f} {t_np / t_jit:>7.1f}x")


if __name__ == "__main__":
    main()

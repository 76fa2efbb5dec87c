"""Compare the numba kernels against the pure-numpy fallback.

Runs the same independence-check and reduced-graph workloads through both
implementations, asserts identical results, and reports wall-clock times.

    python3 benchmarks/bench_backends.py [--runs 50] [--n-max 8]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cmapf._backend import ArrayProblem
from cmapf._backend import numpy_impl
from cmapf.constraints import adjacency_constraints
from cmapf.graph import grid_graph

try:
    from cmapf._backend import numba_impl
except ImportError:  # pragma: no cover
    numba_impl = None


def workload(n: int, samples: int, seed: int):
    """Random candidate sets on an n-by-n grid with adjacency constraints."""
    g = grid_graph(n)
    ap = ArrayProblem(g, adjacency_constraints(g))
    rng = np.random.default_rng(seed)
    sets = []
    while len(sets) < samples:
        size = int(rng.integers(2, max(3, n * n // 6)))
        cand = frozenset(int(v) for v in rng.choice(g.vertices, size=size,
                                                    replace=False))
        sets.append(cand)
    return ap, sets


def run(impl, ap: ArrayProblem, sets) -> tuple[list[bool], float]:
    start = time.perf_counter()
    verdicts = [bool(impl.is_independent_arrays(ap.indptr, ap.indices, ap.X,
                                                ap.caps, ap.to_idx(s)))
                for s in sets]
    return verdicts, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=200,
                        help="candidate sets per grid size")
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if numba_impl is None:
        print("numba unavailable; nothing to compare")
        return 1

    # warm the JIT outside the timed region
    ap0, sets0 = workload(3, 3, args.seed)
    run(numba_impl, ap0, sets0)

    print(f"{'n':>3} {'checks':>7} {'numpy[s]':>10} {'numba[s]':>10} {'speedup':>8}")
    for n in range(3, args.n_max + 1):
        ap, sets = workload(n, args.runs, args.seed)
        v_np, t_np = run(numpy_impl, ap, sets)
        v_nb, t_nb = run(numba_impl, ap, sets)
        assert v_np == v_nb, f"backend disagreement at n={n}"
        speedup = t_np / t_nb if t_nb > 0 else float("inf")
        print(f"{n:>3} {len(sets):>7} {t_np:>10.4f} {t_nb:>10.4f} {speedup:>7.1f}x")
    print("results identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Backend selection for the independence-check kernels.

The numba backend is the default.  Set CMAPF_BACKEND=numpy to force the
pure-numpy fallback (or CMAPF_BACKEND=numba to require the compiled path).
Both expose the same functions; `benchmarks/bench_backends.py` compares them.
"""

from __future__ import annotations

import os

import numpy as np

_requested = os.environ.get("CMAPF_BACKEND", "").strip().lower()
if _requested not in ("", "numpy", "numba"):
    raise ValueError(f"unknown CMAPF_BACKEND value: {_requested!r}")

if _requested == "numpy":
    from . import numpy_impl as impl
elif _requested == "numba":
    from . import numba_impl as impl
else:
    try:
        from . import numba_impl as impl
    except ImportError:  # pragma: no cover - numba missing
        from . import numpy_impl as impl


def backend_name() -> str:
    return impl.NAME


class ArrayProblem:
    """Array view of one (graph, constraints) pair for the kernels.

    Maps vertex ids to dense indices, stores the graph as CSR and the
    constraint family as a weight matrix plus capacity vector.  Build once,
    query independence of many candidate sets.
    """

    def __init__(self, graph, cset):
        self.graph = graph
        self.cset = cset
        vs = list(graph.vertices)
        self.index = {v: i for i, v in enumerate(vs)}
        self.vertex_ids = np.array(vs, dtype=np.int64)
        n = len(vs)
        indptr = np.zeros(n + 1, dtype=np.int64)
        cols = []
        for i, v in enumerate(vs):
            succ = graph.successors(v)
            indptr[i + 1] = indptr[i] + len(succ)
            cols.extend(self.index[w] for w in succ)
        self.indptr = indptr
        self.indices = np.array(cols, dtype=np.int64)
        h = len(cset.constraints)
        self.X = np.zeros((h, n), dtype=np.int64)
        self.caps = np.zeros(h, dtype=np.int64)
        for i, c in enumerate(cset.constraints):
            self.caps[i] = c.capacity
            for v in c.scope:
                self.X[i, self.index[v]] = c.weight(v)

    def to_idx(self, vertices) -> np.ndarray:
        return np.array(sorted(self.index[v] for v in vertices), dtype=np.int64)

    def is_independent(self, vertices) -> bool:
        return bool(impl.is_independent_arrays(
            self.indptr, self.indices, self.X, self.caps, self.to_idx(vertices)))

    def reduced_edges(self, vertices) -> set[tuple[int, int]]:
        w_idx = self.to_idx(vertices)
        red = impl.reduced_adjacency(self.indptr, self.indices, self.X, self.caps, w_idx)
        ids = self.vertex_ids[w_idx]
        out = set()
        for a, b in zip(*np.nonzero(red)):
            out.add((int(ids[a]), int(ids[b])))
        return out

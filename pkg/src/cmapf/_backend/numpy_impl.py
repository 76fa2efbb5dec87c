"""Pure-numpy reference implementation of the independence-check kernels.

Same signatures as the numba backend.  Graphs arrive in CSR form
(indptr/indices), constraints as a dense weight matrix X (h rows, one per
constraint) plus a capacity vector.  Vertex sets are index arrays into the
columns of X.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def strongly_connected_dense(adj: np.ndarray) -> bool:
    """Strong connectivity of a small dense 0/1 adjacency matrix."""
    m = adj.shape[0]
    if m == 0:
        return False
    for mat in (adj, adj.T):
        reach = np.zeros(m, dtype=bool)
        reach[0] = True
        frontier = reach.copy()
        while frontier.any():
            nxt = mat[frontier].any(axis=0) & ~reach
            reach |= nxt
            frontier = nxt
        if not reach.all():
            return False
    return True


def _pair_allowed(X, slack, viol, fail, in_w, u, v):
    """Vertices usable as interior waypoints for the ordered pair (u, v)."""
    bonus = X[:, u] + X[:, v]
    rows = np.nonzero(bonus)[0]
    fail_pair = fail
    if rows.size:
        relaxed = X[rows] > (slack[rows] + bonus[rows])[:, None]
        fail_pair = fail - viol[rows].sum(axis=0) + relaxed.sum(axis=0)
    allowed = (fail_pair == 0) & ~in_w
    allowed[u] = True
    allowed[v] = True
    return allowed


def reduced_adjacency(indptr, indices, X, caps, w_idx) -> np.ndarray:
    """Dense adjacency of the reduced graph over w_idx (membership assumed)."""
    h, n = X.shape
    m = w_idx.shape[0]
    loads = X[:, w_idx].sum(axis=1) if m else np.zeros(h, dtype=np.int64)
    slack = caps - loads
    in_w = np.zeros(n, dtype=bool)
    in_w[w_idx] = True
    viol = X > slack[:, None]
    fail = viol.sum(axis=0)
    red = np.zeros((m, m), dtype=np.uint8)
    for a in range(m):
        u = int(w_idx[a])
        for b in range(m):
            if a == b:
                continue
            v = int(w_idx[b])
            allowed = _pair_allowed(X, slack, viol, fail, in_w, u, v)
            # breadth-first search u -> v restricted to allowed vertices
            seen = np.zeros(n, dtype=bool)
            seen[u] = True
            stack = [u]
            found = False
            while stack and not found:
                y = stack.pop()
                for z in indices[indptr[y]:indptr[y + 1]]:
                    if z == v:
                        found = True
                        break
                    if allowed[z] and not seen[z]:
                        seen[z] = True
                        stack.append(int(z))
            red[a, b] = 1 if found else 0
    return red


def is_independent_arrays(indptr, indices, X, caps, w_idx) -> bool:
    m = w_idx.shape[0]
    if m == 0:
        return True
    loads = X[:, w_idx].sum(axis=1)
    if np.any(loads > caps):
        return False
    if m == 1:
        return True
    return strongly_connected_dense(reduced_adjacency(indptr, indices, X, caps, w_idx))

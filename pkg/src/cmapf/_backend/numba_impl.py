"""Numba-compiled independence-check kernels (hot path of the set search).

Loop-level port of the numpy backend; signatures are identical so callers
can swap implementations via the CMAPF_BACKEND environment flag.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def strongly_connected_dense(adj):
    m = adj.shape[0]
    if m == 0:
        return False
    seen = np.zeros(m, dtype=np.uint8)
    stack = np.empty(m, dtype=np.int64)
    for direction in range(2):
        for i in range(m):
            seen[i] = 0
        seen[0] = 1
        stack[0] = 0
        top = 1
        count = 1
        while top > 0:
            top -= 1
            y = stack[top]
            for z in range(m):
                fwd = adj[y, z] if direction == 0 else adj[z, y]
                if fwd and not seen[z]:
                    seen[z] = 1
                    count += 1
                    stack[top] = z
                    top += 1
        if count != m:
            return False
    return True


@njit(cache=True)
def reduced_adjacency(indptr, indices, X, caps, w_idx):
    h, n = X.shape
    m = w_idx.shape[0]
    loads = np.zeros(h, dtype=np.int64)
    for i in range(h):
        s = 0
        for a in range(m):
            s += X[i, w_idx[a]]
        loads[i] = s
    slack = caps - loads
    in_w = np.zeros(n, dtype=np.uint8)
    for a in range(m):
        in_w[w_idx[a]] = 1
    # base violation table: occupancy = all of W, no vertices released
    viol = np.zeros((h, n), dtype=np.uint8)
    fail = np.zeros(n, dtype=np.int64)
    for i in range(h):
        si = slack[i]
        for x in range(n):
            if X[i, x] > si:
                viol[i, x] = 1
                fail[x] += 1
    red = np.zeros((m, m), dtype=np.uint8)
    failp = np.empty(n, dtype=np.int64)
    allowed = np.zeros(n, dtype=np.uint8)
    seen = np.zeros(n, dtype=np.uint8)
    queue = np.empty(n, dtype=np.int64)
    for a in range(m):
        u = w_idx[a]
        for b in range(m):
            if a == b:
                continue
            v = w_idx[b]
            # releasing u and v relaxes only the constraints they touch
            for x in range(n):
                failp[x] = fail[x]
            for i in range(h):
                bonus = X[i, u] + X[i, v]
                if bonus == 0:
                    continue
                s2 = slack[i] + bonus
                for x in range(n):
                    if viol[i, x]:
                        failp[x] -= 1
                    if X[i, x] > s2:
                        failp[x] += 1
            for x in range(n):
                allowed[x] = 1 if (failp[x] == 0 and in_w[x] == 0) else 0
            allowed[u] = 1
            allowed[v] = 1
            # breadth-first search u -> v restricted to allowed vertices
            for x in range(n):
                seen[x] = 0
            seen[u] = 1
            queue[0] = u
            head = 0
            tail = 1
            found = False
            while head < tail and not found:
                y = queue[head]
                head += 1
                for t in range(indptr[y], indptr[y + 1]):
                    z = indices[t]
                    if z == v:
                        found = True
                        break
                    if allowed[z] and not seen[z]:
                        seen[z] = 1
                        queue[tail] = z
                        tail += 1
            red[a, b] = 1 if found else 0
    return red


@njit(cache=True)
def is_independent_arrays(indptr, indices, X, caps, w_idx):
    h, n = X.shape
    m = w_idx.shape[0]
    if m == 0:
        return True
    for i in range(h):
        s = 0
        for a in range(m):
            s += X[i, w_idx[a]]
        if s > caps[i]:
            return False
    if m == 1:
        return True
    return strongly_connected_dense(reduced_adjacency(indptr, indices, X, caps, w_idx))

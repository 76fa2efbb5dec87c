"""Directed graphs with the connectivity primitives the solver stack builds on.

Vertices are non-negative integer ids.  Graphs are immutable after
construction; every operation here is a pure query or a constructor.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable


class GraphError(ValueError):
    pass


class Digraph:
    """Simple directed graph: integer vertices, no self-loops, no multi-edges."""

    __slots__ = ("vertices", "edges", "_succ", "_pred")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        vs = tuple(sorted(set(int(v) for v in vertices)))
        if any(v < 0 for v in vs):
            raise GraphError("vertex ids must be non-negative")
        vset = set(vs)
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) has endpoint outside vertex set")
            es.add((u, v))
        self.vertices = vs
        self.edges = frozenset(es)
        succ: dict[int, list[int]] = {v: [] for v in vs}
        pred: dict[int, list[int]] = {v: [] for v in vs}
        for u, v in es:
            succ[u].append(v)
            pred[v].append(u)
        self._succ = {v: tuple(sorted(ws)) for v, ws in succ.items()}
        self._pred = {v: tuple(sorted(ws)) for v, ws in pred.items()}

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def has_vertex(self, v: int) -> bool:
        return v in self._succ

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct in- or out-neighbors of v (symmetric pairs counted once)."""
        return frozenset(self._succ[v]) | frozenset(self._pred[v])

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Digraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


def _sweep(g: Digraph, root: int, nbrs) -> set[int]:
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in nbrs(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path.

    One forward and one backward traversal from an arbitrary root.
    """
    if not g.vertices:
        raise GraphError("empty graph")
    root = g.vertices[0]
    n = len(g.vertices)
    if len(_sweep(g, root, g.successors)) != n:
        return False
    return len(_sweep(g, root, g.predecessors)) == n


def contract(g: Digraph, v: int) -> Digraph:
    """Contract vertex v: drop it and bridge every (u,v),(v,w) pair to (u,w).

    Self-loops that would arise from (u,v),(v,u) are discarded.
    """
    if not g.has_vertex(v):
        raise GraphError(f"unknown vertex {v}")
    edges = [(a, b) for a, b in g.edges if v not in (a, b)]
    for u in g.predecessors(v):
        for w in g.successors(v):
            if u != w:
                edges.append((u, w))
    return Digraph((x for x in g.vertices if x != v), edges)


def reachable(g: Digraph, src: int, dst: int,
              allowed: Callable[[int], bool] | None = None) -> bool:
    """Directed reachability visiting only vertices satisfying `allowed`."""
    if allowed is None:
        allowed = lambda _v: True
    if not (g.has_vertex(src) and g.has_vertex(dst)):
        raise GraphError("unknown vertex")
    if not (allowed(src) and allowed(dst)):
        raise GraphError("endpoint filtered out")
    if src == dst:
        return True
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for w in g.successors(u):
            if w == dst:
                return True
            if w not in seen and allowed(w):
                seen.add(w)
                stack.append(w)
    return False


def shortest_path(g: Digraph, src: int, dst: int,
                  allowed: Callable[[int], bool] | None = None) -> tuple[int, ...] | None:
    """Breadth-first shortest path (as a vertex sequence) or None.

    Interior vertices and endpoints must satisfy `allowed`.
    """
    if allowed is None:
        allowed = lambda _v: True
    if not (allowed(src) and allowed(dst)):
        raise GraphError("endpoint filtered out")
    if src == dst:
        return (src,)
    parent: dict[int, int] = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.successors(u):
            if w in parent or not allowed(w):
                continue
            parent[w] = u
            if w == dst:
                path = [w]
                while path[-1] != src:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            queue.append(w)
    return None


def grid_graph(n: int) -> Digraph:
    """n-by-n lattice, row-major ids starting at 1, each adjacency bidirected."""
    if n < 1:
        raise GraphError("degenerate grid")
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c + 1
            if c + 1 < n:
                edges += [(v, v + 1), (v + 1, v)]
            if r + 1 < n:
                edges += [(v, v + n), (v + n, v)]
    return Digraph(range(1, n * n + 1), edges)

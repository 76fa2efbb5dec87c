"""Reduced graphs over destination vertex sets, with lift witnesses.

Given a graph, a constraint family C, and a set W in C, the reduced graph
has an edge (u, v) exactly when a pebble can travel from u to v while all
other W-vertices stay occupied and no visited configuration leaves C.  A
set is independent when its reduced graph is strongly connected; those are
the sets on which unconstrained MAPF plans can be lifted back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .constraints import ConstraintError, ConstraintSet
from .graph import Digraph, is_strongly_connected, shortest_path


@dataclass(frozen=True)
class ReducedGraph:
    base: Digraph
    cset: ConstraintSet
    w: frozenset[int]
    edges: frozenset[tuple[int, int]]
    lifts: dict[tuple[int, int], tuple[int, ...]]

    def as_digraph(self) -> Digraph:
        return Digraph(self.w, self.edges)

    def lift(self, u: int, v: int) -> tuple[int, ...]:
        return self.lifts[(u, v)]


def filtered_vertices(g: Digraph, c: ConstraintSet, w: Iterable[int],
                      v1: int, v2: int) -> Callable[[int], bool]:
    """Predicate for the vertices a pebble may visit while moving v1 -> v2.

    Erases the other W-vertices and every vertex whose presence next to
    W \\ {v1, v2} would break a constraint.  v1 and v2 themselves are always
    admitted (W is in C, so its subsets are too).
    """
    wset = frozenset(w)
    if v1 not in wset or v2 not in wset:
        raise ConstraintError("endpoints must belong to the destination set")
    blocked = wset - {v1, v2}

    def allowed(x: int) -> bool:
        if x == v1 or x == v2:
            return True
        if x in blocked:
            return False
        return c.is_member(blocked | {x})

    return allowed


def build_reduced(g: Digraph, c: ConstraintSet, w: Iterable[int]) -> ReducedGraph:
    """Reduced graph over w, storing one shortest witness path per edge."""
    wset = frozenset(w)
    if not wset:
        raise ConstraintError("destination set is empty")
    if not wset <= set(g.vertices):
        raise ConstraintError("destination set outside graph")
    if not c.is_member(wset):
        raise ConstraintError("seed set violates constraints")
    edges = set()
    lifts = {}
    for v1 in sorted(wset):
        for v2 in sorted(wset):
            if v1 == v2:
                continue
            allowed = filtered_vertices(g, c, wset, v1, v2)
            path = shortest_path(g, v1, v2, allowed)
            if path is not None:
                edges.add((v1, v2))
                lifts[(v1, v2)] = path
    return ReducedGraph(g, c, wset, frozenset(edges), lifts)


def is_independent(g: Digraph, c: ConstraintSet, w: Iterable[int]) -> bool:
    """Empty sets are independent; otherwise w must be in C with a strongly
    connected reduced graph."""
    wset = frozenset(w)
    if not wset:
        return True
    if not wset <= set(g.vertices):
        raise ConstraintError("destination set outside graph")
    if not c.is_member(wset):
        return False
    return is_strongly_connected(build_reduced(g, c, wset).as_digraph())

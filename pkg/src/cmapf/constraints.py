"""Weighted capacity constraints over vertex sets.

A constraint family is kept in knapsack form: triples (scope, capacity,
weights).  The pair form (scope, capacity) is the special case of unit
weights.  Membership of a vertex set is the conjunction of all knapsack
inequalities, which makes the family hereditary by construction: removing
vertices can only lower every weighted sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, Iterable, Mapping

import numpy as np


class ConstraintError(ValueError):
    pass


@dataclass(frozen=True)
class CapacityConstraint:
    """At most `capacity` total weight of occupied vertices inside `scope`."""

    scope: frozenset[int]
    capacity: int
    weights: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "scope", frozenset(self.scope))
        if self.capacity < 0:
            raise ConstraintError("capacity must be non-negative")
        w = dict(self.weights)
        for v, wv in w.items():
            if v not in self.scope:
                raise ConstraintError(f"weight key {v} outside scope")
            if wv < 1:
                raise ConstraintError("weights must be positive")
        object.__setattr__(self, "weights", w)

    def weight(self, v: int) -> int:
        """Weight of v inside the scope; absent entries default to 1."""
        return self.weights.get(v, 1)

    def load(self, u: Iterable[int]) -> int:
        return sum(self.weight(v) for v in u if v in self.scope)

    def satisfied_by(self, u: Iterable[int]) -> bool:
        return self.load(u) <= self.capacity


class ConstraintSet:
    """Family of capacity constraints over a declared vertex universe."""

    def __init__(self, universe: Iterable[int], constraints: Iterable[CapacityConstraint] = ()):
        self.universe = frozenset(int(v) for v in universe)
        cs = tuple(constraints)
        for c in cs:
            if not c.scope <= self.universe:
                raise ConstraintError("constraint scope outside universe")
        self.constraints = cs

    def is_member(self, u: Iterable[int]) -> bool:
        uset = frozenset(u)
        if not uset <= self.universe:
            raise ConstraintError("vertex outside universe")
        return all(c.satisfied_by(uset) for c in self.constraints)

    def __len__(self):
        return len(self.constraints)

    def __repr__(self):
        return f"ConstraintSet(|V|={len(self.universe)}, h={len(self.constraints)})"


def from_pairs(universe: Iterable[int],
               pairs: Iterable[tuple[Iterable[int], int]]) -> ConstraintSet:
    """Pair-form constructor: each (S, k) caps the plain cardinality |S ∩ U|."""
    return ConstraintSet(
        universe,
        (CapacityConstraint(frozenset(s), k) for s, k in pairs),
    )


def adjacency_constraints(g) -> ConstraintSet:
    """One unit pair constraint {u, v} with capacity 1 per undirected adjacency."""
    seen = set()
    for u, v in g.edges:
        seen.add(frozenset((u, v)))
    pairs = sorted(seen, key=sorted)
    return from_pairs(g.vertices, ((s, 1) for s in pairs))


def expand_covers(c: CapacityConstraint) -> list[tuple[frozenset[int], int]]:
    """All minimal covers of a knapsack constraint, as pair-form constraints.

    A cover is a subset of the scope whose total weight exceeds the capacity;
    it is minimal when dropping any element makes it fit.  Each cover C' turns
    into the cardinality constraint (C', |C'| - 1).  Minimal covers suffice
    for equivalence: any overweight intersection contains a minimal cover.
    """
    scope = sorted(c.scope)
    if len(scope) > 20:
        raise ConstraintError("cover expansion would be exponential")
    out = []
    for r in range(1, len(scope) + 1):
        for sub in combinations(scope, r):
            total = sum(c.weight(v) for v in sub)
            if total <= c.capacity:
                continue
            if all(total - c.weight(v) <= c.capacity for v in sub):
                out.append((frozenset(sub), r - 1))
    return out


class OccupancyTracker:
    """Incremental bookkeeping of per-constraint loads for one occupied set.

    Holds the fixed per-vertex weight matrix and a running load vector, so
    that feasibility of adding, removing, or swapping vertices is an O(h)
    arithmetic check instead of a from-scratch recount.  Single-owner
    mutable state; clone for parallel use.
    """

    def __init__(self, cset: ConstraintSet, occupied: Iterable[int] = ()):
        self.cset = cset
        self.index = {v: i for i, v in enumerate(sorted(cset.universe))}
        n, h = len(self.index), len(cset.constraints)
        self.weights = np.zeros((h, n), dtype=np.int64)
        self.caps = np.zeros(h, dtype=np.int64)
        for i, c in enumerate(cset.constraints):
            self.caps[i] = c.capacity
            for v in c.scope:
                self.weights[i, self.index[v]] = c.weight(v)
        self.loads = np.zeros(h, dtype=np.int64)
        self.occupied: set[int] = set()
        for v in occupied:
            if not self.add(v):
                raise ConstraintError(f"initial occupancy violates constraints at {v}")

    def clone(self) -> "OccupancyTracker":
        t = object.__new__(OccupancyTracker)
        t.cset, t.index, t.weights, t.caps = self.cset, self.index, self.weights, self.caps
        t.loads = self.loads.copy()
        t.occupied = set(self.occupied)
        return t

    def _col(self, v: int):
        try:
            return self.weights[:, self.index[v]]
        except KeyError:
            raise ConstraintError("vertex outside universe") from None

    def can_add(self, v: int) -> bool:
        return bool(np.all(self.loads + self._col(v) <= self.caps))

    def add(self, v: int) -> bool:
        """Commit v iff every constraint still fits; no mutation on reject."""
        if v in self.occupied:
            raise ConstraintError("occupancy state mismatch")
        col = self._col(v)
        if not np.all(self.loads + col <= self.caps):
            return False
        self.loads += col
        self.occupied.add(v)
        return True

    def remove(self, v: int) -> None:
        if v not in self.occupied:
            raise ConstraintError("occupancy state mismatch")
        self.loads -= self._col(v)
        self.occupied.remove(v)

    def check_swap(self, drop: Iterable[int], probe: int) -> bool:
        """Feasibility of (occupied \\ drop) ∪ {probe}, without mutating."""
        drop = set(drop)
        if not drop <= self.occupied:
            raise ConstraintError("occupancy state mismatch")
        if probe not in drop and probe in self.occupied:
            raise ConstraintError("occupancy state mismatch")
        loads = self.loads.copy()
        for v in drop:
            loads -= self._col(v)
        loads += self._col(probe)
        return bool(np.all(loads <= self.caps))


def verify_asc(c: ConstraintSet | Callable[[frozenset[int]], bool],
               universe: Iterable[int] | None = None,
               universe_limit: int = 16) -> bool:
    """Exhaustively check the two set-family axioms: ∅ in family, closed under subsets.

    Test-scale oracle only; enumerates all 2^|V| subsets.
    """
    if isinstance(c, ConstraintSet):
        member = c.is_member
        vs = sorted(c.universe)
    else:
        member = c
        vs = sorted(universe or ())
    if len(vs) > universe_limit:
        raise ConstraintError("universe too large to enumerate")
    subsets = list(chain.from_iterable(combinations(vs, r) for r in range(len(vs) + 1)))
    if not member(frozenset()):
        return False
    for sub in subsets:
        if member(frozenset(sub)):
            for v in sub:
                if not member(frozenset(sub) - {v}):
                    return False
    return True

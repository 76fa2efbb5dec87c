"""Shared fixtures: the two five-vertex reference instances, the
non-matroid seven-vertex instance, and seeded random-instance generators."""

from __future__ import annotations

import numpy as np
import pytest

from cmapf.constraints import ConstraintSet, from_pairs
from cmapf.graph import Digraph, is_strongly_connected


@pytest.fixture(scope="session")
def cycle5() -> Digraph:
    """Directed five-cycle 1 -> 2 -> 3 -> 4 -> 5 -> 1."""
    return Digraph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


@pytest.fixture(scope="session")
def cycle5_chord(cycle5) -> Digraph:
    """The five-cycle plus the chord 3 -> 5."""
    return Digraph(cycle5.vertices, list(cycle5.edges) + [(3, 5)])


@pytest.fixture(scope="session")
def pair_c5() -> ConstraintSet:
    """At most one of {1,4} and at most one of {2,3}."""
    return from_pairs(range(1, 6), [((1, 4), 1), ((2, 3), 1)])


@pytest.fixture(scope="session")
def seven_vertex() -> tuple[Digraph, ConstraintSet]:
    """Seven-vertex instance whose independence system violates the matroid
    exchange axiom: consecutive vertices of the outer 6-cycle exclude each
    other."""
    g = Digraph(range(1, 8),
                [(1, 7), (7, 4), (2, 3), (1, 2), (3, 4), (4, 5), (5, 6), (6, 1)])
    ring = [((1, 2), 1), ((2, 3), 1), ((3, 4), 1),
            ((4, 5), 1), ((5, 6), 1), ((6, 1), 1)]
    return g, from_pairs(range(1, 8), ring)


def random_sc_digraph(rng: np.random.Generator, n: int,
                      extra_edges: int = 0) -> Digraph:
    """Random strongly connected digraph: a random Hamiltonian cycle plus
    `extra_edges` additional random arcs."""
    perm = list(rng.permutation(np.arange(1, n + 1)))
    edges = {(int(perm[i]), int(perm[(i + 1) % n])) for i in range(n)}
    tries = 0
    while len(edges) < n + extra_edges and tries < 50 * (extra_edges + 1):
        u, v = (int(x) for x in rng.integers(1, n + 1, size=2))
        tries += 1
        if u != v:
            edges.add((u, v))
    g = Digraph(range(1, n + 1), edges)
    assert is_strongly_connected(g)
    return g


def random_pair_constraints(rng: np.random.Generator, n: int,
                            count: int) -> ConstraintSet:
    """Random capacity-one vertex pairs over 1..n."""
    pairs = set()
    tries = 0
    while len(pairs) < count and tries < 50 * (count + 1):
        u, v = (int(x) for x in rng.integers(1, n + 1, size=2))
        tries += 1
        if u != v:
            pairs.add(frozenset((u, v)))
    return from_pairs(range(1, n + 1), [(sorted(p), 1) for p in sorted(pairs, key=sorted)])

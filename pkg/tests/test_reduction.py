from itertools import combinations

import pytest

from cmapf.constraints import ConstraintError, from_pairs
from cmapf.graph import Digraph
from cmapf.reduction import build_reduced, filtered_vertices, is_independent


class TestFilteredVertices:
    def test_blocks_other_w_vertices(self, cycle5, pair_c5):
        allowed = filtered_vertices(cycle5, pair_c5, {2, 4, 5}, 2, 4)
        assert not allowed(5)
        assert allowed(3)

    def test_blocks_constraint_violators(self, cycle5_chord, pair_c5):
        # moving 3 -> 5 while 1 stays occupied: vertex 4 would join 1 in
        # the ({1,4},1) pair, so it cannot serve as a waypoint
        allowed = filtered_vertices(cycle5_chord, pair_c5, {1, 3, 5}, 3, 5)
        assert not allowed(4)  # {4} next to occupied {1} breaks ({1,4},1)
        assert allowed(2)      # {2} next to occupied {1} is fine

    def test_endpoints_always_allowed(self, cycle5, pair_c5):
        allowed = filtered_vertices(cycle5, pair_c5, {1, 4}, 1, 4)
        assert allowed(1) and allowed(4)

    def test_endpoints_must_be_in_w(self, cycle5, pair_c5):
        with pytest.raises(ConstraintError, match="must belong"):
            filtered_vertices(cycle5, pair_c5, {2, 4}, 2, 3)


class TestBuildReduced:
    def test_two_vertex_set_on_cycle(self, cycle5, pair_c5):
        rg = build_reduced(cycle5, pair_c5, {2, 4})
        assert rg.edges == frozenset({(2, 4), (4, 2)})
        assert rg.lift(2, 4) == (2, 3, 4)
        assert rg.lift(4, 2) == (4, 5, 1, 2)

    def test_three_vertex_set_on_chorded_cycle(self, cycle5_chord, pair_c5):
        rg = build_reduced(cycle5_chord, pair_c5, {1, 3, 5})
        assert rg.edges == frozenset({(1, 3), (3, 5), (5, 1)})

    def test_non_independent_set_edges(self, cycle5_chord, pair_c5):
        rg = build_reduced(cycle5_chord, pair_c5, {2, 4, 5})
        assert rg.edges == frozenset({(2, 4), (2, 5), (4, 5)})
        assert (5, 2) not in rg.edges

    def test_lifts_are_paths_in_base_graph(self, cycle5_chord, pair_c5):
        rg = build_reduced(cycle5_chord, pair_c5, {1, 3, 5})
        for (u, v), path in rg.lifts.items():
            assert path[0] == u and path[-1] == v
            for a, b in zip(path, path[1:]):
                assert (a, b) in cycle5_chord.edges

    def test_seed_violating_constraints(self, cycle5, pair_c5):
        with pytest.raises(ConstraintError, match="violates constraints"):
            build_reduced(cycle5, pair_c5, {1, 4})

    def test_seed_outside_graph(self, cycle5, pair_c5):
        with pytest.raises(ConstraintError, match="outside graph"):
            build_reduced(cycle5, pair_c5, {9})

    def test_empty_seed(self, cycle5, pair_c5):
        with pytest.raises(ConstraintError, match="empty"):
            build_reduced(cycle5, pair_c5, set())

    def test_as_digraph(self, cycle5, pair_c5):
        g = build_reduced(cycle5, pair_c5, {2, 4}).as_digraph()
        assert g.vertices == (2, 4)
        assert g.edges == frozenset({(2, 4), (4, 2)})


class TestIsIndependent:
    def test_reference_verdicts(self, cycle5, cycle5_chord, pair_c5):
        assert is_independent(cycle5, pair_c5, {2, 4})
        assert is_independent(cycle5_chord, pair_c5, {1, 3, 5})
        assert not is_independent(cycle5_chord, pair_c5, {2, 4, 5})

    def test_non_member_is_dependent(self, cycle5, pair_c5):
        assert not is_independent(cycle5, pair_c5, {1, 4})

    def test_empty_and_singletons(self, cycle5, pair_c5):
        assert is_independent(cycle5, pair_c5, set())
        for v in cycle5.vertices:
            assert is_independent(cycle5, pair_c5, {v})

    def test_hereditary_on_reference_instance(self, cycle5_chord, pair_c5):
        w = {1, 3, 5}
        for r in range(len(w) + 1):
            for sub in combinations(w, r):
                assert is_independent(cycle5_chord, pair_c5, set(sub))

    def test_contraction_subgraph_inclusion(self, cycle5_chord, pair_c5):
        # dropping a vertex from W never removes edges between the others
        big = build_reduced(cycle5_chord, pair_c5, {1, 3, 5})
        small = build_reduced(cycle5_chord, pair_c5, {1, 3})
        kept = {(u, v) for u, v in big.edges if {u, v} <= {1, 3}}
        assert kept <= small.edges

    def test_unconstrained_sets(self, cycle5):
        c = from_pairs(range(1, 6), [])
        # fully occupied cycle: consecutive pairs keep their direct edges,
        # so the reduced graph is the cycle itself
        assert is_independent(cycle5, c, set(cycle5.vertices))
        # non-adjacent pair on the bare cycle still connects both ways
        assert is_independent(cycle5, c, {1, 3})

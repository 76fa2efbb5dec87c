"""Constrained multi-agent path finding via reduction to plain MAPF.

Instances pair a directed graph with a hereditary family of admissible
occupied-vertex sets (capacity constraints).  The toolkit finds large
independent destination sets, builds the reduced graph over them, solves
unconstrained MAPF there, and lifts plans back to the original graph.
"""

from ._backend import backend_name
from .cmis import (CmisInstance, CmisResult, SelectionRule, exact_cmis,
                   maximal_independent, multi_restart)
from .constraints import (CapacityConstraint, ConstraintError, ConstraintSet,
                          OccupancyTracker, adjacency_constraints,
                          expand_covers, from_pairs, verify_asc)
from .gadgets import (CnfFormula, GadgetError, MisInstance, SatGadget,
                      decode_assignment, max_independent_set_bruteforce,
                      mis_to_cmis, parse_dimacs, sat_to_cmp)
from .graph import (Digraph, GraphError, contract, grid_graph,
                    is_strongly_connected, reachable, shortest_path)
from .planner import (BudgetError, CmapfInstanceFull, Configuration,
                      ConstraintViolation, PlanError, SolveResult, SolveStatus,
                      apply_move, apply_plan, lift_plan, oracle_cmapf,
                      solve_cmapf, solve_mapf, two_stage_solve)
from .reduction import ReducedGraph, build_reduced, filtered_vertices, is_independent

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "CmisInstance", "CmisResult", "SelectionRule", "exact_cmis",
    "maximal_independent", "multi_restart",
    "CapacityConstraint", "ConstraintError", "ConstraintSet",
    "OccupancyTracker", "adjacency_constraints", "expand_covers",
    "from_pairs", "verify_asc",
    "CnfFormula", "GadgetError", "MisInstance", "SatGadget",
    "decode_assignment", "max_independent_set_bruteforce", "mis_to_cmis",
    "parse_dimacs", "sat_to_cmp",
    "Digraph", "GraphError", "contract", "grid_graph",
    "is_strongly_connected", "reachable", "shortest_path",
    "BudgetError", "CmapfInstanceFull", "Configuration",
    "ConstraintViolation", "PlanError", "SolveResult", "SolveStatus",
    "apply_move", "apply_plan", "lift_plan", "oracle_cmapf",
    "solve_cmapf", "solve_mapf", "two_stage_solve",
    "ReducedGraph", "build_reduced", "filtered_vertices", "is_independent",
]

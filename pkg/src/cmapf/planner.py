"""Pebble configurations, plan semantics, and the solver pipeline.

Pebbles are labeled; a configuration maps each pebble id to a distinct
vertex.  Plans are words of directed moves, applied one pebble at a time.
`solve_cmapf` runs the reduction pipeline (independence check, reduced
graph, breadth-first MAPF, lift, validation); `oracle_cmapf` is the
independent brute-force solver over the exact problem semantics, used as
ground truth.  A reduced-pipeline "infeasible" never certifies the
original instance infeasible: the reduction is lossy by design.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .constraints import ConstraintError, ConstraintSet
from .graph import Digraph
from .reduction import ReducedGraph, build_reduced, is_independent

Move = tuple[int, int]
Plan = tuple[Move, ...]


class PlanError(ValueError):
    pass


class ConstraintViolation(PlanError):
    def __init__(self, prefix_index: int, detail: str):
        super().__init__(f"constraint breach at prefix {prefix_index}: {detail}")
        self.prefix_index = prefix_index
        self.detail = detail


@dataclass(frozen=True)
class Configuration:
    """Injective pebble-id -> vertex placement."""

    placement: Mapping[int, int]

    def __post_init__(self):
        p = dict(self.placement)
        if len(set(p.values())) != len(p):
            raise PlanError("configuration is not injective")
        object.__setattr__(self, "placement", p)

    def occupied(self) -> frozenset[int]:
        return frozenset(self.placement.values())

    def pebble_at(self, v: int) -> int | None:
        for p, u in self.placement.items():
            if u == v:
                return p
        return None

    def moved(self, u: int, v: int) -> "Configuration":
        p = dict(self.placement)
        p[self.pebble_at(u)] = v
        return Configuration(p)

    def __getitem__(self, pebble: int) -> int:
        return self.placement[pebble]

    def pebbles(self) -> tuple[int, ...]:
        return tuple(sorted(self.placement))


@dataclass(frozen=True)
class CmapfInstanceFull:
    """Problem unit: graph, constraints, endpoint configurations.

    With `marked` set the instance is a motion-planning one: only the
    marked pebble's target binds, the rest are movable obstacles.
    """

    graph: Digraph
    constraints: ConstraintSet
    source: Configuration
    target: Configuration
    marked: int | None = None

    def __post_init__(self):
        if self.source.pebbles() != self.target.pebbles():
            raise PlanError("source and target pebble sets differ")
        vs = set(self.graph.vertices)
        if not (self.source.occupied() <= vs and self.target.occupied() <= vs):
            raise PlanError("configuration outside graph")
        if self.marked is not None and self.marked not in self.source.placement:
            raise PlanError("marked pebble not in configuration")

    def goal_reached(self, cfg: Configuration) -> bool:
        if self.marked is not None:
            return cfg[self.marked] == self.target[self.marked]
        return cfg.placement == self.target.placement


def apply_move(g: Digraph, cfg: Configuration, move: Move) -> Configuration:
    """One transition; defined only if the edge exists, u is occupied, and
    v is empty."""
    u, v = move
    if (u, v) not in g.edges:
        raise PlanError(f"transition undefined: ({u}, {v}) is not an edge")
    occ = cfg.occupied()
    if u not in occ:
        raise PlanError(f"transition undefined: no pebble at {u}")
    if v in occ:
        raise PlanError(f"transition undefined: vertex {v} occupied")
    return cfg.moved(u, v)


def apply_plan(g: Digraph, cfg: Configuration, plan: Iterable[Move],
               check: ConstraintSet | None = None) -> Configuration:
    """Left-fold of apply_move; with `check`, every prefix occupancy
    (including the start) must be a constraint member."""
    if check is not None and not check.is_member(cfg.occupied()):
        raise ConstraintViolation(0, f"occupancy {sorted(cfg.occupied())} not admissible")
    for i, move in enumerate(plan, start=1):
        try:
            cfg = apply_move(g, cfg, move)
        except PlanError as e:
            raise PlanError(f"prefix {i}: {e}") from None
        if check is not None and not check.is_member(cfg.occupied()):
            raise ConstraintViolation(i, f"occupancy {sorted(cfg.occupied())} not admissible")
    return cfg


class BudgetError(RuntimeError):
    pass


def _bfs_plans(g: Digraph, src: Configuration, goal_test, admissible,
               state_cap: int, cap_message: str):
    """Shared breadth-first search over configurations; returns a plan or
    None when the reachable space is exhausted."""
    pebbles = src.pebbles()
    start = tuple(src[p] for p in pebbles)
    if not admissible(frozenset(start)):
        return None
    if goal_test(start):
        return ()
    parents: dict[tuple, tuple] = {start: None}
    moves: dict[tuple, Move] = {}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        occ = set(state)
        for i, u in enumerate(state):
            for v in g.successors(u):
                if v in occ:
                    continue
                nxt = state[:i] + (v,) + state[i + 1:]
                if nxt in parents:
                    continue
                if not admissible(frozenset(nxt)):
                    continue
                parents[nxt] = state
                moves[nxt] = (u, v)
                if goal_test(nxt):
                    plan = []
                    s = nxt
                    while parents[s] is not None:
                        plan.append(moves[s])
                        s = parents[s]
                    return tuple(reversed(plan))
                if len(parents) > state_cap:
                    raise BudgetError(cap_message)
                queue.append(nxt)
    return None


def solve_mapf(g: Digraph, src: Configuration, dst: Configuration,
               marked: int | None = None, state_cap: int = 5_000_000) -> Plan | None:
    """Complete shortest-plan MAPF on a plain digraph (no constraint set).

    Labeled pebbles; exhaustive breadth-first search, so None is a proof
    of infeasibility within the state cap.
    """
    pebbles = src.pebbles()
    if pebbles != dst.pebbles():
        raise PlanError("source and target pebble sets differ")
    order = {p: i for i, p in enumerate(pebbles)}
    if marked is None:
        goal = tuple(dst[p] for p in pebbles)
        goal_test = lambda state: state == goal
    else:
        mi, mt = order[marked], dst[marked]
        goal_test = lambda state: state[mi] == mt
    return _bfs_plans(g, src, goal_test, lambda occ: True,
                      state_cap, "state budget exceeded")


def lift_plan(rg: ReducedGraph, plan: Iterable[Move]) -> Plan:
    """Expand each reduced-graph move into the unit moves of its stored
    witness path."""
    out: list[Move] = []
    for u, v in plan:
        if (u, v) not in rg.edges:
            raise PlanError(f"move ({u}, {v}) is not a reduced-graph edge")
        path = rg.lift(u, v)
        out.extend(zip(path, path[1:]))
    return tuple(out)


class SolveStatus(Enum):
    FEASIBLE = "FEASIBLE"
    INFEASIBLE_VIA_REDUCTION = "INFEASIBLE_VIA_REDUCTION"
    PROVEN_INFEASIBLE = "PROVEN_INFEASIBLE"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    plan: Plan | None = None
    w: frozenset[int] = field(default_factory=frozenset)

    @property
    def feasible(self) -> bool:
        return self.status is SolveStatus.FEASIBLE


def _bound_vertices(inst: CmapfInstanceFull) -> frozenset[int]:
    """Vertices the reduction must retain: all sources plus binding targets."""
    out = set(inst.source.occupied())
    if inst.marked is None:
        out |= inst.target.occupied()
    else:
        out.add(inst.target[inst.marked])
    return frozenset(out)


def _default_w(inst: CmapfInstanceFull) -> frozenset[int]:
    from .cmis import CmisInstance, multi_restart

    seed = _bound_vertices(inst)
    if not is_independent(inst.graph, inst.constraints, seed):
        raise PlanError("no single-stage reduction: source/target set is not independent")
    best, _ = multi_restart(CmisInstance(inst.graph, inst.constraints, seed), runs=20)
    return best


def solve_cmapf(inst: CmapfInstanceFull, w: Iterable[int] | None = None,
                state_cap: int = 5_000_000) -> SolveResult:
    """Reduction pipeline.  INFEASIBLE_VIA_REDUCTION only says the reduced
    MAPF has no solution; the original instance may still be solvable."""
    wset = frozenset(w) if w is not None else _default_w(inst)
    if w is not None:
        if not _bound_vertices(inst) <= wset:
            raise PlanError("destination set must contain sources and targets")
        if not is_independent(inst.graph, inst.constraints, wset):
            raise PlanError("no single-stage reduction: W is not independent")
    rg = build_reduced(inst.graph, inst.constraints, wset)
    reduced_plan = solve_mapf(rg.as_digraph(), inst.source, inst.target,
                              marked=inst.marked, state_cap=state_cap)
    if reduced_plan is None:
        return SolveResult(SolveStatus.INFEASIBLE_VIA_REDUCTION, None, wset)
    lifted = lift_plan(rg, reduced_plan)
    final = apply_plan(inst.graph, inst.source, lifted, check=inst.constraints)
    if not inst.goal_reached(final):
        raise PlanError("lifted plan failed to reach the target")  # soundness guard
    return SolveResult(SolveStatus.FEASIBLE, lifted, wset)


def two_stage_solve(inst: CmapfInstanceFull, w1: Iterable[int], w2: Iterable[int],
                    state_cap: int = 5_000_000) -> SolveResult:
    """Route through an intermediate parking configuration in w1 ∩ w2.

    Used when sources and targets have no common independent superset.
    The intermediate placement is the lexicographically smallest injective
    assignment (or the target itself when it already parks in both sets).
    """
    w1, w2 = frozenset(w1), frozenset(w2)
    pebbles = inst.source.pebbles()
    if not inst.source.occupied() <= w1:
        raise PlanError("sources must lie inside the first destination set")
    if not inst.target.occupied() <= w2:
        raise PlanError("targets must lie inside the second destination set")
    common = w1 & w2
    if len(common) < len(pebbles):
        raise PlanError("no intermediate parking: |w1 ∩ w2| < number of pebbles")
    for name, wset in (("w1", w1), ("w2", w2)):
        if not is_independent(inst.graph, inst.constraints, wset):
            raise PlanError(f"{name} is not independent")
    if inst.target.occupied() <= common:
        mid = inst.target
    else:
        mid = Configuration(dict(zip(pebbles, sorted(common))))
    rg1 = build_reduced(inst.graph, inst.constraints, w1)
    plan1 = solve_mapf(rg1.as_digraph(), inst.source, mid, state_cap=state_cap)
    if plan1 is None:
        return SolveResult(SolveStatus.INFEASIBLE_VIA_REDUCTION, None, w1)
    rg2 = build_reduced(inst.graph, inst.constraints, w2)
    plan2 = solve_mapf(rg2.as_digraph(), mid, inst.target,
                       marked=inst.marked, state_cap=state_cap)
    if plan2 is None:
        return SolveResult(SolveStatus.INFEASIBLE_VIA_REDUCTION, None, w2)
    lifted = lift_plan(rg1, plan1) + lift_plan(rg2, plan2)
    final = apply_plan(inst.graph, inst.source, lifted, check=inst.constraints)
    if not inst.goal_reached(final):
        raise PlanError("lifted plan failed to reach the target")
    return SolveResult(SolveStatus.FEASIBLE, lifted, w1 | w2)


def oracle_cmapf(inst: CmapfInstanceFull, state_cap: int = 2_000_000) -> SolveResult:
    """Brute-force ground truth: breadth-first search over constraint-member
    configurations of the original graph.  Complete within the state cap."""
    pebbles = inst.source.pebbles()
    order = {p: i for i, p in enumerate(pebbles)}
    if inst.marked is None:
        goal = tuple(inst.target[p] for p in pebbles)
        goal_test = lambda state: state == goal
    else:
        mi, mt = order[inst.marked], inst.target[inst.marked]
        goal_test = lambda state: state[mi] == mt
    member = inst.constraints.is_member
    plan = _bfs_plans(inst.graph, inst.source, goal_test, member,
                      state_cap, "oracle budget exceeded")
    if plan is None:
        return SolveResult(SolveStatus.PROVEN_INFEASIBLE, None)
    return SolveResult(SolveStatus.FEASIBLE, plan)

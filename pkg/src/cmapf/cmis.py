"""Searching for large independent sets.

`maximal_independent` grows a seed set one vertex at a time until no
candidate survives, with pluggable selection rules (seeded random, or one
of two greedy scores).  `exact_cmis` is a branch-and-bound maximum solver;
pruning rests on the hereditary property: once a vertex fails against the
current set, it fails against every superset.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import inf

import numpy as np

from ._backend import ArrayProblem
from .constraints import ConstraintError, ConstraintSet
from .graph import Digraph

RULE_KINDS = ("random", "greedy-psi", "greedy-degree")


@dataclass(frozen=True)
class CmisInstance:
    graph: Digraph
    constraints: ConstraintSet
    seed: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "seed", frozenset(self.seed))


@dataclass(frozen=True)
class SelectionRule:
    """Vertex-selection policy for the growth loop; ties break on lowest id."""

    kind: str
    rng_seed: int = 0

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown selection rule {self.kind!r}")

    @staticmethod
    def random(rng_seed: int) -> "SelectionRule":
        return SelectionRule("random", rng_seed)

    @staticmethod
    def greedy_psi() -> "SelectionRule":
        return SelectionRule("greedy-psi")

    @staticmethod
    def greedy_degree() -> "SelectionRule":
        return SelectionRule("greedy-degree")


def psi_expandability(v: int, m, c: ConstraintSet) -> int:
    """Number of vertices w that could still join after v does."""
    mset = frozenset(m)
    base = mset | {v}
    if not c.is_member(base):
        raise ConstraintError("candidate violates constraints")
    return sum(1 for w in c.universe if w not in base and c.is_member(base | {w}))


def psi_inverse_degree(v: int, excluded, g: Digraph):
    """Reciprocal degree of v in the subgraph without `excluded`; isolated
    vertices score +inf and are picked first."""
    exc = frozenset(excluded)
    if v in exc:
        raise ValueError("vertex already excluded")
    deg = sum(1 for w in g.neighbors(v) if w not in exc)
    return inf if deg == 0 else Fraction(1, deg)


class _Grower:
    """State shared by one growth run: loads vector and exclusion sets."""

    def __init__(self, inst: CmisInstance, problem: ArrayProblem | None = None):
        self.ap = problem if problem is not None else ArrayProblem(inst.graph, inst.constraints)
        self.inst = inst

    def blocked_by_membership(self, loads) -> set[int]:
        """L(M): vertices whose addition alone already breaks a constraint."""
        slack = self.ap.caps - loads
        bad = (self.ap.X > slack[:, None]).any(axis=0)
        return {int(self.ap.vertex_ids[i]) for i in np.nonzero(bad)[0]}

    def run(self, rule: SelectionRule) -> frozenset[int]:
        ap = self.ap
        m = set(self.inst.seed)
        if not ap.is_independent(m):
            raise ConstraintError("infeasible seed")
        loads = (ap.X[:, ap.to_idx(m)].sum(axis=1) if m
                 else np.zeros(len(ap.caps), dtype=np.int64))
        excluded = set(m) | self.blocked_by_membership(loads)
        delta = sorted(v for v in self.inst.graph.vertices if v not in excluded)
        rng = np.random.default_rng(rule.rng_seed) if rule.kind == "random" else None
        while True:
            grew = False
            while delta and not grew:
                v = self._select(rule, rng, delta, m, loads, excluded)
                if ap.is_independent(m | {v}):
                    m.add(v)
                    loads = loads + ap.X[:, ap.index[v]]
                    excluded |= self.blocked_by_membership(loads)
                    grew = True
                excluded.add(v)
                delta = [x for x in delta if x not in excluded]
            if not grew:
                return frozenset(m)

    def _select(self, rule, rng, delta, m, loads, excluded) -> int:
        if rule.kind == "random":
            return delta[int(rng.integers(len(delta)))]
        if rule.kind == "greedy-degree":
            g = self.inst.graph
            return min(delta, key=lambda v: (sum(1 for w in g.neighbors(v)
                                                 if w not in excluded), v))
        # greedy-psi: vectorized count of joint-feasible partners
        ap = self.ap
        best_v, best_score = None, -1
        occupied_idx = ap.to_idx(m) if m else np.array([], dtype=np.int64)
        taken = np.zeros(len(ap.vertex_ids), dtype=bool)
        taken[occupied_idx] = True
        for v in delta:
            iv = ap.index[v]
            slack = ap.caps - loads - ap.X[:, iv]
            ok = (ap.X <= slack[:, None]).all(axis=0)
            ok[iv] = False
            ok &= ~taken
            score = int(ok.sum())
            if score > best_score:
                best_v, best_score = v, score
        return best_v


def maximal_independent(inst: CmisInstance, rule: SelectionRule,
                        problem: ArrayProblem | None = None) -> frozenset[int]:
    """One run of the growth loop; returns a maximal independent superset
    of the seed."""
    return _Grower(inst, problem).run(rule)


@dataclass(frozen=True)
class CmisResult:
    vertices: frozenset[int]
    proven_optimal: bool
    optima: tuple[frozenset[int], ...] | None = None


def exact_cmis(inst: CmisInstance, budget: float = 600.0,
               enumerate_all: bool = False,
               problem: ArrayProblem | None = None) -> CmisResult:
    """Maximum-cardinality independent superset of the seed.

    Depth-first branch and bound over vertex inclusion in ascending id
    order.  Candidate lists shrink monotonically (hereditary pruning);
    bound is current size plus remaining candidates.  With enumerate_all,
    every maximum set is collected.  Budget exhaustion returns the best
    set found, flagged unproven.
    """
    ap = problem if problem is not None else ArrayProblem(inst.graph, inst.constraints)
    seed = sorted(inst.seed)
    if not ap.is_independent(seed):
        raise ConstraintError("infeasible seed")
    deadline = time.monotonic() + budget
    cand0 = [v for v in inst.graph.vertices
             if v not in inst.seed and ap.is_independent(inst.seed | {v})]

    best_size = len(seed)
    optima: list[frozenset[int]] = [frozenset(seed)]
    timed_out = False

    def rec(m: list[int], cand: list[int]):
        nonlocal best_size, optima, timed_out
        if timed_out or time.monotonic() > deadline:
            timed_out = True
            return
        if len(m) > best_size:
            best_size = len(m)
            optima = [frozenset(m)]
        elif enumerate_all and len(m) == best_size and m:
            s = frozenset(m)
            if s not in optima:
                optima.append(s)
        slackness = 0 if enumerate_all else 1
        for i, v in enumerate(cand):
            rest = cand[i + 1:]
            if len(m) + 1 + len(rest) < best_size + slackness:
                break
            mv = m + [v]
            cand2 = [w for w in rest if ap.is_independent(mv + [w])]
            rec(mv, cand2)

    rec(seed, cand0)
    return CmisResult(
        vertices=max(optima, key=lambda s: (len(s), sorted(s))),
        proven_optimal=not timed_out,
        optima=tuple(sorted(optima, key=sorted)) if enumerate_all and not timed_out else None,
    )


@dataclass(frozen=True)
class RestartRow:
    run_index: int
    cardinality: int
    vertices: tuple[int, ...]


def multi_restart(inst: CmisInstance, runs: int, base_seed: int = 0,
                  problem: ArrayProblem | None = None) -> tuple[frozenset[int], list[RestartRow]]:
    """Repeated random-rule runs with derived seeds base_seed + i.

    Returns the best set (ties resolved toward the earliest run) and the
    per-run cardinality histogram.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    grower = _Grower(inst, problem)
    rows = []
    best: frozenset[int] = frozenset()
    for i in range(runs):
        result = grower.run(SelectionRule.random(base_seed + i))
        rows.append(RestartRow(i, len(result), tuple(sorted(result))))
        if len(result) > len(best):
            best = result
    return best, rows

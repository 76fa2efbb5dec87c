"""Executable hardness constructions used as test-instance generators.

`sat_to_cmp` turns a 3-CNF formula into a motion-planning instance whose
feasibility is equivalent to satisfiability: a marked pebble must cross a
clause chain, and movable obstacles that vacate variable hub nodes commit
each variable to true or false.  `mis_to_cmis` embeds classical maximum
independent set into the constrained independent-set problem via an extra
hub vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .cmis import CmisInstance
from .constraints import CapacityConstraint, ConstraintSet
from .graph import Digraph
from .planner import CmapfInstanceFull, Configuration

Literal = tuple[int, bool]  # (variable index 1..n, polarity)


class GadgetError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """CNF with clauses of one to three literals."""

    variable_count: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses",
                           tuple(tuple(c) for c in self.clauses))
        for clause in self.clauses:
            if not 1 <= len(clause) <= 3:
                raise GadgetError("clause exceeds 3 literals"
                                  if clause else "empty clause")
            for var, _pol in clause:
                if not 1 <= var <= self.variable_count:
                    raise GadgetError(f"variable index {var} out of range")

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(assignment[var] == pol for var, pol in clause)
                   for clause in self.clauses)

    def is_satisfiable(self) -> bool:
        """Truth-table satisfiability; fine at gadget scale."""
        for values in product((False, True), repeat=self.variable_count):
            if self.evaluate(dict(enumerate(values, start=1))):
                return True
        return False


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS-CNF subset: `p cnf n m` header, clause lines ending in 0."""
    n = None
    clauses: list[tuple[Literal, ...]] = []
    pending: list[Literal] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GadgetError(f"line {lineno}: malformed problem line")
            n = int(parts[2])
            continue
        if n is None:
            raise GadgetError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if len(pending) > 3:
                    raise GadgetError(f"line {lineno}: clause exceeds 3 literals")
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append((abs(lit), lit > 0))
    if pending:
        raise GadgetError("unterminated clause (missing 0)")
    if n is None:
        raise GadgetError("missing problem line")
    return CnfFormula(n, tuple(clauses))


@dataclass(frozen=True)
class SatGadget:
    """The generated instance plus the node-role map needed for decoding."""

    formula: CnfFormula
    instance: CmapfInstanceFull
    source_node: int
    target_node: int
    var_nodes: Mapping[int, tuple[int, int, int]]  # var -> (o_i, x_i, xbar_i)
    obstacle_pebbles: Mapping[int, int]  # pebble id -> variable index


def sat_to_cmp(f: CnfFormula) -> SatGadget:
    """3-SAT to motion planning (canonical node numbering).

    Layout: 0 = start, 1 = chain gate, then one node per clause literal in
    clause order, then the target, then per variable a block (o_i, x_i,
    xbar_i).  Consecutive clauses' literal nodes are fully connected, so the
    marked pebble must pick one literal per clause.  Pair constraints:
    {gate, o_i} force every obstacle off its hub before the pebble enters
    the chain, and {literal node, variable node of that literal} make a
    clause node passable only when the obstacle's final position agrees
    with the literal.
    """
    n, clauses = f.variable_count, f.clauses
    s, d1 = 0, 1
    nodes = [s, d1]
    edges: list[tuple[int, int]] = [(s, d1)]
    nxt = 2
    literal_nodes: list[list[tuple[int, Literal]]] = []
    prev_ids = [d1]
    for clause in clauses:
        layer = []
        for lit in clause:
            layer.append((nxt, lit))
            nodes.append(nxt)
            nxt += 1
        edges.extend((p, c) for p in prev_ids for c, _lit in layer)
        literal_nodes.append(layer)
        prev_ids = [c for c, _lit in layer]
    t = nxt
    nodes.append(t)
    nxt += 1
    edges.extend((p, t) for p in prev_ids)
    var_nodes: dict[int, tuple[int, int, int]] = {}
    for i in range(1, n + 1):
        o, x, xbar = nxt, nxt + 1, nxt + 2
        nodes.extend((o, x, xbar))
        edges.extend(((o, x), (o, xbar)))
        var_nodes[i] = (o, x, xbar)
        nxt += 3
    constraints = [CapacityConstraint(frozenset((d1, var_nodes[i][0])), 1)
                   for i in range(1, n + 1)]
    for layer in literal_nodes:
        for c, (var, pol) in layer:
            _o, x, xbar = var_nodes[var]
            constraints.append(
                CapacityConstraint(frozenset((c, x if pol else xbar)), 1))
    graph = Digraph(nodes, edges)
    cset = ConstraintSet(nodes, constraints)
    placement = {0: s}
    obstacle_pebbles = {}
    for i in range(1, n + 1):
        placement[i] = var_nodes[i][0]
        obstacle_pebbles[i] = i
    src = Configuration(placement)
    dst = Configuration({**placement, 0: t})
    inst = CmapfInstanceFull(graph, cset, src, dst, marked=0)
    return SatGadget(f, inst, s, t, var_nodes, obstacle_pebbles)


def decode_assignment(gadget: SatGadget, final_cfg: Configuration) -> dict[int, bool]:
    """Read the assignment off the obstacles' final positions.

    An obstacle resting at xbar_i means x_i is true (the true-branch node
    stays free for the pebble), at x_i means false.
    """
    out: dict[int, bool] = {}
    for pebble, var in gadget.obstacle_pebbles.items():
        o, x, xbar = gadget.var_nodes[var]
        pos = final_cfg[pebble]
        if pos == o:
            raise GadgetError("gadget contract violated: obstacle still at hub")
        if pos == x:
            out[var] = False
        elif pos == xbar:
            out[var] = True
        else:
            raise GadgetError("gadget contract violated: obstacle off its block")
    return out


@dataclass(frozen=True)
class MisInstance:
    """Undirected graph for classical maximum independent set."""

    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vertices)))
        es = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise GadgetError("edges must join two distinct vertices")
            if not e <= set(vs):
                raise GadgetError("edge endpoint outside vertex set")
            es.add(e)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))


def max_independent_set_bruteforce(m: MisInstance) -> frozenset[int]:
    """Classical MIS by subset enumeration, largest first; test-scale oracle."""
    vs = m.vertices
    for r in range(len(vs), 0, -1):
        for sub in combinations(vs, r):
            ss = set(sub)
            if all(not e <= ss for e in m.edges):
                return frozenset(sub)
    return frozenset()


def mis_to_cmis(m: MisInstance, hub_capacity: int | None = None) -> CmisInstance:
    """Classical MIS embedded into C-MIS via a hub vertex.

    The hub is bidirected to every original vertex; each original edge
    becomes a unit pair constraint; one knapsack over all vertices gives
    the hub weight 2.  The knapsack capacity defaults to the classical MIS
    cardinality: optima of the transformed instance then coincide exactly
    with the classical optima, and the hub (weight 2 against capacity k
    already k-filled by any candidate optimum) can never join one.
    """
    hub = (max(m.vertices) + 1) if m.vertices else 1
    vs = list(m.vertices) + [hub]
    edges: list[tuple[int, int]] = []
    for e in m.edges:
        u, v = sorted(e)
        edges.extend(((u, v), (v, u)))
    for v in m.vertices:
        edges.extend(((v, hub), (hub, v)))
    constraints = [CapacityConstraint(e, 1) for e in sorted(m.edges, key=sorted)]
    if hub_capacity is None:
        hub_capacity = len(max_independent_set_bruteforce(m))
    constraints.append(
        CapacityConstraint(frozenset(vs), hub_capacity, {hub: 2}))
    return CmisInstance(Digraph(vs, edges), ConstraintSet(vs, constraints))

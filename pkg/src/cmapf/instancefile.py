"""Line-oriented text format for problem instances and plans.

Grammar ('#' starts a comment, blank lines ignored):

    nodes 1 2 3 ...          explicit vertex list
    grid 5                   n-by-n grid (vertices, bidirected lattice edges)
    edge u v                 directed edge
    undirected               flag: mirror every edge line
    constraint k: v1 v2 ...  capacity constraint, optional `weights w1 w2 ...`
    pebble id src dst        one agent
    marked id                motion-planning mode: only this pebble's target binds

A grid instance with no constraint lines defaults to the adjacency
constraint family (capacity one per lattice edge).  Parse errors carry the
offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constraints import CapacityConstraint, ConstraintSet, adjacency_constraints
from .graph import Digraph, grid_graph
from .planner import CmapfInstanceFull, Configuration, Move, Plan, SolveStatus


class InstanceParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class ParsedInstance:
    """Instance document; pebbles are optional (reduce/cmis need none)."""

    graph: Digraph
    constraints: ConstraintSet
    pebbles: dict[int, tuple[int, int]]
    marked: int | None = None

    def to_cmapf(self) -> CmapfInstanceFull:
        if not self.pebbles:
            raise InstanceParseError(0, "instance declares no pebbles")
        src = Configuration({p: s for p, (s, _d) in self.pebbles.items()})
        dst = Configuration({p: d for p, (_s, d) in self.pebbles.items()})
        return CmapfInstanceFull(self.graph, self.constraints, src, dst, self.marked)


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InstanceParseError(lineno, f"expected integers, got {' '.join(parts)!r}") from None


def parse_instance(text: str) -> ParsedInstance:
    nodes: list[int] | None = None
    grid_n: int | None = None
    edges: list[tuple[int, int]] = []
    undirected = False
    constraints: list[CapacityConstraint] = []
    pebbles: dict[int, tuple[int, int]] = {}
    marked: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "nodes":
            if nodes is not None or grid_n is not None:
                raise InstanceParseError(lineno, "duplicate nodes/grid declaration")
            nodes = _ints(rest, lineno)
            if not nodes:
                raise InstanceParseError(lineno, "empty node list")
        elif key == "grid":
            if nodes is not None or grid_n is not None:
                raise InstanceParseError(lineno, "duplicate nodes/grid declaration")
            if len(rest) != 1:
                raise InstanceParseError(lineno, "grid takes one size argument")
            grid_n = _ints(rest, lineno)[0]
            if grid_n < 1:
                raise InstanceParseError(lineno, "grid size must be positive")
        elif key == "edge":
            if len(rest) != 2:
                raise InstanceParseError(lineno, "edge takes two endpoints")
            u, v = _ints(rest, lineno)
            edges.append((u, v))
        elif key == "undirected":
            if rest:
                raise InstanceParseError(lineno, "undirected takes no arguments")
            undirected = True
        elif key == "constraint":
            constraints.append(_parse_constraint(rest, lineno))
        elif key == "pebble":
            if len(rest) != 3:
                raise InstanceParseError(lineno, "pebble takes id, source, target")
            pid, src, dst = _ints(rest, lineno)
            if pid in pebbles:
                raise InstanceParseError(lineno, f"duplicate pebble id {pid}")
            pebbles[pid] = (src, dst)
        elif key == "marked":
            if len(rest) != 1:
                raise InstanceParseError(lineno, "marked takes one pebble id")
            marked = _ints(rest, lineno)[0]
        else:
            raise InstanceParseError(lineno, f"unknown directive {key!r}")
    if nodes is None and grid_n is None:
        raise InstanceParseError(0, "missing nodes or grid declaration")
    if grid_n is not None:
        g = grid_graph(grid_n)
        if edges:
            extra = edges + [(v, u) for u, v in edges] if undirected else edges
            g = Digraph(g.vertices, list(g.edges) + extra)
        cset = (ConstraintSet(g.vertices, constraints) if constraints
                else adjacency_constraints(g))
    else:
        if undirected:
            edges = edges + [(v, u) for u, v in edges]
        try:
            g = Digraph(nodes, edges)
        except ValueError as e:
            raise InstanceParseError(0, str(e)) from None
        cset = ConstraintSet(g.vertices, constraints)
    for pid, (s, d) in pebbles.items():
        if not (g.has_vertex(s) and g.has_vertex(d)):
            raise InstanceParseError(0, f"pebble {pid} endpoint outside graph")
    if marked is not None and marked not in pebbles:
        raise InstanceParseError(0, f"marked pebble {marked} not declared")
    return ParsedInstance(g, cset, pebbles, marked)


def _parse_constraint(rest: list[str], lineno: int) -> CapacityConstraint:
    # constraint k: v1 v2 ... [weights w1 w2 ...]
    if not rest or not rest[0].endswith(":"):
        raise InstanceParseError(lineno, "constraint syntax is 'constraint k: v1 v2 ...'")
    try:
        k = int(rest[0][:-1])
    except ValueError:
        raise InstanceParseError(lineno, f"bad capacity {rest[0][:-1]!r}") from None
    body = rest[1:]
    weights: list[int] = []
    if "weights" in body:
        cut = body.index("weights")
        weights = _ints(body[cut + 1:], lineno)
        body = body[:cut]
    scope = _ints(body, lineno)
    if not scope:
        raise InstanceParseError(lineno, "empty constraint scope")
    if weights and len(weights) != len(scope):
        raise InstanceParseError(lineno, "weights count differs from scope size")
    try:
        return CapacityConstraint(frozenset(scope), k,
                                  dict(zip(scope, weights)) if weights else {})
    except ValueError as e:
        raise InstanceParseError(lineno, str(e)) from None


def serialize_instance(inst: ParsedInstance) -> str:
    """Canonical text form; parse(serialize(x)) is semantically equal to x."""
    out = [f"nodes {' '.join(map(str, inst.graph.vertices))}"]
    for u, v in sorted(inst.graph.edges):
        out.append(f"edge {u} {v}")
    for c in inst.constraints.constraints:
        scope = sorted(c.scope)
        line = f"constraint {c.capacity}: {' '.join(map(str, scope))}"
        if c.weights:
            line += " weights " + " ".join(str(c.weight(v)) for v in scope)
        out.append(line)
    for pid in sorted(inst.pebbles):
        s, d = inst.pebbles[pid]
        out.append(f"pebble {pid} {s} {d}")
    if inst.marked is not None:
        out.append(f"marked {inst.marked}")
    return "\n".join(out) + "\n"


def serialize_plan(status: SolveStatus, plan: Plan | None) -> str:
    out = [status.value]
    for u, v in plan or ():
        out.append(f"{u} -> {v}")
    return "\n".join(out) + "\n"


def parse_plan(text: str) -> tuple[SolveStatus, tuple[Move, ...]]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines:
        raise InstanceParseError(0, "empty plan file")
    first_no, first = lines[0]
    try:
        status = SolveStatus(first)
    except ValueError:
        raise InstanceParseError(first_no, f"unknown status {first!r}") from None
    moves = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[1] != "->":
            raise InstanceParseError(lineno, f"expected 'u -> v', got {ln!r}")
        u, v = _ints([parts[0], parts[2]], lineno)
        moves.append((u, v))
    return status, tuple(moves)

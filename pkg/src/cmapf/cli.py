"""Command-line surface.

Subcommands: reduce, cmis, solve, validate, gadget, bench-grid.
Exit codes encode verdicts so shell harnesses need no output parsing:
0 success/feasible, 2 parse or usage error, 3 destination set not a
constraint member, 4 infeasible via reduction, 5 proven infeasible,
6 plan validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cmis import CmisInstance, SelectionRule, exact_cmis, maximal_independent, multi_restart
from .constraints import ConstraintError, adjacency_constraints
from .gadgets import (GadgetError, MisInstance, mis_to_cmis, parse_dimacs, sat_to_cmp)
from .graph import grid_graph
from .instancefile import (InstanceParseError, ParsedInstance, parse_instance,
                           parse_plan, serialize_instance, serialize_plan)
from .planner import (ConstraintViolation, PlanError, SolveStatus, apply_plan,
                      oracle_cmapf, solve_cmapf, two_stage_solve)
from .reduction import build_reduced, is_independent

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_MEMBER = 3
EXIT_REDUCTION_INFEASIBLE = 4
EXIT_PROVEN_INFEASIBLE = 5
EXIT_INVALID_PLAN = 6

_STATUS_EXIT = {
    SolveStatus.FEASIBLE: EXIT_OK,
    SolveStatus.INFEASIBLE_VIA_REDUCTION: EXIT_REDUCTION_INFEASIBLE,
    SolveStatus.PROVEN_INFEASIBLE: EXIT_PROVEN_INFEASIBLE,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_instance(path: str) -> ParsedInstance:
    try:
        return parse_instance(Path(path).read_text())
    except (OSError, InstanceParseError, ValueError) as e:
        raise CliError(f"{path}: {e}", EXIT_PARSE) from None


def _parse_vertex_list(spec: str) -> frozenset[int]:
    try:
        return frozenset(int(t) for t in spec.replace(",", " ").split())
    except ValueError:
        raise CliError(f"bad vertex list {spec!r}", EXIT_PARSE) from None


def cmd_reduce(args) -> int:
    inst = _load_instance(args.instance)
    w = _parse_vertex_list(args.w)
    try:
        if not inst.constraints.is_member(w):
            print(f"W {sorted(w)}: NOT A CONSTRAINT MEMBER")
            return EXIT_NOT_MEMBER
    except ConstraintError as e:
        raise CliError(str(e), EXIT_PARSE) from None
    rg = build_reduced(inst.graph, inst.constraints, w)
    independent = is_independent(inst.graph, inst.constraints, w)
    print(f"W {sorted(w)}: {'INDEPENDENT' if independent else 'NOT INDEPENDENT'}")
    for u, v in sorted(rg.edges):
        print(f"edge ({u}, {v}) lift {'-'.join(map(str, rg.lift(u, v)))}")
    if not independent:
        missing = [(u, v) for u in sorted(w) for v in sorted(w)
                   if u != v and (u, v) not in rg.edges]
        for u, v in missing:
            print(f"missing ({u}, {v})")
    return EXIT_OK if independent else EXIT_NOT_MEMBER


def cmd_cmis(args) -> int:
    inst = _load_instance(args.instance)
    ci = CmisInstance(inst.graph, inst.constraints)
    print("run_index,cardinality,vertices")
    if args.rule == "random":
        _best, rows = multi_restart(ci, runs=args.runs, base_seed=args.seed)
        for r in rows:
            print(f"{r.run_index},{r.cardinality},{';'.join(map(str, r.vertices))}")
    else:
        result = maximal_independent(ci, SelectionRule(args.rule))
        print(f"0,{len(result)},{';'.join(map(str, sorted(result)))}")
    if args.exact:
        res = exact_cmis(ci, budget=args.budget)
        flag = "PROVEN" if res.proven_optimal else "UNPROVEN"
        print(f"exact,{len(res.vertices)},"
              f"{';'.join(map(str, sorted(res.vertices)))},{flag}")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load_instance(args.instance).to_cmapf()
    try:
        if args.oracle:
            result = oracle_cmapf(inst)
        elif args.two_stage:
            parts = args.two_stage.split(";")
            if len(parts) != 2:
                raise CliError("--two-stage takes 'w1;w2'", EXIT_PARSE)
            result = two_stage_solve(inst, _parse_vertex_list(parts[0]),
                                     _parse_vertex_list(parts[1]))
        else:
            w = _parse_vertex_list(args.w) if args.w else None
            result = solve_cmapf(inst, w=w)
    except ConstraintError as e:
        raise CliError(str(e), EXIT_NOT_MEMBER) from None
    except PlanError as e:
        code = EXIT_NOT_MEMBER if "independent" in str(e) else EXIT_PARSE
        raise CliError(str(e), code) from None
    text = serialize_plan(result.status, result.plan)
    if args.output:
        Path(args.output).write_text(text)
    sys.stdout.write(text)
    return _STATUS_EXIT[result.status]


def cmd_validate(args) -> int:
    parsed = _load_instance(args.instance)
    inst = parsed.to_cmapf()
    try:
        status, moves = parse_plan(Path(args.plan).read_text())
    except (OSError, InstanceParseError) as e:
        raise CliError(f"{args.plan}: {e}", EXIT_PARSE) from None
    if status is not SolveStatus.FEASIBLE:
        print(f"VALID (no plan to check: {status.value})")
        return EXIT_OK
    try:
        final = apply_plan(inst.graph, inst.source, moves, check=inst.constraints)
    except ConstraintViolation as e:
        print(f"INVALID at prefix {e.prefix_index}: {e.detail}")
        return EXIT_INVALID_PLAN
    except PlanError as e:
        print(f"INVALID: {e}")
        return EXIT_INVALID_PLAN
    if not inst.goal_reached(final):
        print("INVALID: plan does not reach the target configuration")
        return EXIT_INVALID_PLAN
    print("VALID")
    return EXIT_OK


def cmd_gadget(args) -> int:
    try:
        if args.kind == "sat":
            gadget = sat_to_cmp(parse_dimacs(Path(args.input).read_text()))
            gi = gadget.instance
            pebbles = {p: (gi.source[p], gi.target[p]) for p in gi.source.pebbles()}
            parsed = ParsedInstance(gi.graph, gi.constraints, pebbles, gi.marked)
        else:  # mis
            src = _load_instance(args.input)
            undirected = frozenset(frozenset(e) for e in src.graph.edges)
            ci = mis_to_cmis(MisInstance(src.graph.vertices, undirected))
            parsed = ParsedInstance(ci.graph, ci.constraints, {})
    except (OSError, GadgetError) as e:
        raise CliError(str(e), EXIT_PARSE) from None
    text = serialize_instance(parsed)
    if args.output:
        Path(args.output).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_bench_grid(args) -> int:
    print("n,random_best,greedy_degree,exact")
    for n in range(2, args.n_max + 1):
        g = grid_graph(n)
        ci = CmisInstance(g, adjacency_constraints(g))
        best, _rows = multi_restart(ci, runs=args.runs, base_seed=args.seed)
        greedy = maximal_independent(ci, SelectionRule.greedy_degree())
        if n <= 5:
            res = exact_cmis(ci, budget=args.budget)
            exact = str(len(res.vertices)) + ("" if res.proven_optimal else "?")
        else:
            exact = ""
        print(f"{n},{len(best)},{len(greedy)},{exact}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmapf",
                                description="constrained MAPF reduction toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", help="build and report a reduced graph")
    r.add_argument("instance")
    r.add_argument("--w", required=True, help="destination vertices, comma-separated")
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("cmis", help="search for large independent sets")
    c.add_argument("instance")
    c.add_argument("--rule", choices=("random", "greedy-psi", "greedy-degree"),
                   default="random")
    c.add_argument("--runs", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--exact", action="store_true")
    c.add_argument("--budget", type=float, default=600.0)
    c.set_defaults(func=cmd_cmis)

    s = sub.add_parser("solve", help="solve an instance via reduction or oracle")
    s.add_argument("instance")
    s.add_argument("--w", help="destination vertices (default: heuristic search)")
    s.add_argument("--two-stage", help="two destination sets as 'w1;w2'")
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--output", help="write the plan file here as well")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("validate", help="replay a plan with constraint checking")
    v.add_argument("instance")
    v.add_argument("plan")
    v.set_defaults(func=cmd_validate)

    g = sub.add_parser("gadget", help="generate a hardness-construction instance")
    g.add_argument("kind", choices=("sat", "mis"))
    g.add_argument("input")
    g.add_argument("--output")
    g.set_defaults(func=cmd_gadget)

    b = sub.add_parser("bench-grid", help="grid benchmark table")
    b.add_argument("--n-max", type=int, default=12)
    b.add_argument("--runs", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--budget", type=float, default=600.0)
    b.set_defaults(func=cmd_bench_grid)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Every command prints JSON on standard output. Exit status: 0 for a
positive answer or success, 1 for a certified negative, 2 when the answer is
unknown or a search budget ran out, 3 for errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import formats
from .bench import ALGORITHMS, parse_sizes, run_bench
from .circle import alternance_graph, multigraph_from_word
from .dh import random_dh_with_trace
from .dhstar import NOT_VERTEX_MINOR, PLAN, solve_star
from .errors import BudgetExceeded, SizeCapExceeded, VertexMinorError
from .graph import LabeledGraph, complete_graph, path_graph, star_graph
from .ksoet import DEFAULT_MAX_MARKED, DEFAULT_PATH_BUDGET, k_soet
from .localops import TransformationPlan, plan_from_json
from .oracle import DEFAULT_BRANCH_BUDGET, DEFAULT_SIZE_CAP, vertex_minor_bruteforce
from .small import small_vertex_minor
from .soet import (
    hamiltonian_cycle,
    random_cubic,
    reduce_cubham_to_starvm,
    soet_from_hamiltonian,
    star_plan_from_soet,
    triangular_expansion,
)
from .stabilizer import DEFAULT_QUBIT_CAP, verify_plan_report

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_ERROR = 0, 1, 2, 3

ORACLE_BUDGET = int(os.environ.get("VERTEXMINOR_BUDGET", DEFAULT_BRANCH_BUDGET))


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _labels(text: str) -> list:
    return [formats.parse_label(t) for t in text.split(",") if t.strip()]


def _emit(data: dict) -> None:
    print(json.dumps(data, default=_default))


def _default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=str)
    if isinstance(obj, TransformationPlan):
        return [m.to_dict() for m in obj.moves]
    raise TypeError(f"not serializable: {obj!r}")


def _plan(plan: TransformationPlan | None):
    return None if plan is None else [m.to_dict() for m in plan.moves]


# ------------------------------------------------------------ commands


def cmd_check_vm(args) -> int:
    g = formats.read_graph(args.graph)
    target = formats.read_graph(args.target)
    try:
        plan = vertex_minor_bruteforce(g, target, budget=args.budget, cap=args.cap)
    except (BudgetExceeded, SizeCapExceeded) as exc:
        _emit({"is_vertex_minor": None, "reason": str(exc)})
        return EXIT_UNKNOWN
    _emit({"is_vertex_minor": plan is not None, "plan": _plan(plan)})
    return EXIT_YES if plan is not None else EXIT_NO


def cmd_dh_star(args) -> int:
    g = formats.read_graph(args.graph)
    verdict = solve_star(g, _labels(args.targets), check_dh=not args.no_dh_check)
    _emit(
        {
            "status": verdict.status,
            "plan": _plan(verdict.plan),
            "certified_dh": verdict.certified_dh,
            "center": verdict.center,
        }
    )
    return {PLAN: EXIT_YES, NOT_VERTEX_MINOR: EXIT_NO}.get(verdict.status, EXIT_UNKNOWN)


def _small_target(vertices: list, shape: str, center) -> LabeledGraph:
    if len(vertices) == 1:
        return LabeledGraph(vertices)
    if len(vertices) == 2 or shape == "star":
        return star_graph(vertices, center if center is not None else vertices[0])
    if shape == "triangle":
        return complete_graph(vertices)
    return path_graph(vertices)


def cmd_small(args) -> int:
    g = formats.read_graph(args.graph)
    vertices = _labels(args.target)
    center = formats.parse_label(args.center) if args.center is not None else None
    target = _small_target(vertices, args.shape, center)
    plan = small_vertex_minor(g, target)
    _emit({"target": formats.graph_to_dict(target), "plan": _plan(plan)})
    return EXIT_YES


def _read_multigraph_arg(args):
    if args.word is not None:
        return multigraph_from_word(formats.word_from_text(args.word))[0]
    if args.multigraph is None:
        raise VertexMinorError("give --multigraph or --word")
    return formats.read_multigraph(args.multigraph)


def cmd_ksoet(args) -> int:
    f = _read_multigraph_arg(args)
    try:
        w = k_soet(f, _labels(args.marked), budget=args.budget, max_marked=args.max_marked)
    except BudgetExceeded as exc:
        _emit({"exists": None, "reason": str(exc)})
        return EXIT_UNKNOWN
    if w is None:
        _emit({"exists": False})
        return EXIT_NO
    _emit({"exists": True, "witness_word": list(w.tour.vertices), "order": list(w.order)})
    return EXIT_YES


def cmd_expand(args) -> int:
    x = triangular_expansion(formats.read_graph(args.cubic))
    if args.format == "text":
        sys.stdout.write(formats.multigraph_to_text(x.multigraph))
    else:
        _emit(formats.multigraph_to_dict(x.multigraph))
    return EXIT_YES


def cmd_reduce(args) -> int:
    r = formats.read_graph(args.cubic)
    inst = reduce_cubham_to_starvm(r)
    out = {"graph": formats.graph_to_dict(inst.graph), "targets": sorted(inst.targets, key=str)}
    code = EXIT_YES
    if args.decide:
        cycle = hamiltonian_cycle(r)
        out["hamiltonian_cycle"] = cycle
        if cycle is None:
            out["star_vertex_minor"] = False
            code = EXIT_NO
        else:
            w = soet_from_hamiltonian(inst.expansion, cycle)
            out["star_vertex_minor"] = True
            out["plan"] = _plan(star_plan_from_soet(inst, w))
    _emit(out)
    return code


def cmd_gen_dh(args) -> int:
    g, trace = random_dh_with_trace(args.n, args.seed, args.p_leaf, args.p_false, args.p_true)
    _emit({"graph": formats.graph_to_dict(g), "trace": [list(step) for step in trace]})
    return EXIT_YES


def cmd_gen_cubic(args) -> int:
    g = random_cubic(args.n, args.seed)
    if args.format == "text":
        sys.stdout.write(formats.graph_to_text(g))
    else:
        _emit(formats.graph_to_dict(g))
    return EXIT_YES


def cmd_verify(args) -> int:
    g = formats.read_graph(args.graph)
    target = formats.read_graph(args.target)
    moves = plan_from_json(Path(args.plan).read_text())
    report = verify_plan_report(g, target, moves, cap=args.cap)
    out = {"ok": report.ok, "branches": report.branches}
    if not report.ok:
        out["failing_branch"] = [list(step) for step in report.failure or ()]
        out["reason"] = report.reason
    _emit(out)
    return EXIT_YES if report.ok else EXIT_NO


def cmd_bench(args) -> int:
    for rec in run_bench(args.algo, parse_sizes(args.sizes), args.trials, args.targets, args.seed):
        _emit(rec.to_dict())
        sys.stdout.flush()
    return EXIT_YES


def cmd_convert(args) -> int:
    sources = [s for s in (args.graph, args.multigraph, args.word) if s is not None]
    if len(sources) != 1:
        raise VertexMinorError("give exactly one of --graph, --multigraph, --word")
    to = args.to
    if args.word is not None:
        word = formats.word_from_text(args.word)
        if to == "multigraph":
            sys.stdout.write(formats.multigraph_to_text(multigraph_from_word(word)[0]))
        elif to == "graph":
            sys.stdout.write(formats.graph_to_text(alternance_graph(word)))
        elif to == "json":
            _emit(formats.graph_to_dict(alternance_graph(word)))
        elif to == "dot":
            sys.stdout.write(formats.multigraph_to_dot(multigraph_from_word(word)[0]))
        else:
            raise VertexMinorError(f"cannot convert a word to {to!r}")
        return EXIT_YES
    if args.multigraph is not None:
        f = formats.read_multigraph(args.multigraph)
        if to in ("text", "multigraph"):
            sys.stdout.write(formats.multigraph_to_text(f))
        elif to == "json":
            _emit(formats.multigraph_to_dict(f))
        elif to == "dot":
            sys.stdout.write(formats.multigraph_to_dot(f))
        else:
            raise VertexMinorError(f"cannot convert a multigraph to {to!r}")
        return EXIT_YES
    g = formats.read_graph(args.graph)
    if to in ("text", "graph"):
        sys.stdout.write(formats.graph_to_text(g))
    elif to == "json":
        _emit(formats.graph_to_dict(g))
    elif to == "dot":
        sys.stdout.write(formats.graph_to_dot(g))
    else:
        raise VertexMinorError(f"cannot convert a graph to {to!r}")
    return EXIT_YES


# -------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vertexminor", description="Vertex-minor and graph-state extraction tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check-vm", help="brute-force vertex-minor test")
    s.add_argument("--graph", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--budget", type=int, default=ORACLE_BUDGET)
    s.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)
    s.set_defaults(func=cmd_check_vm)

    s = sub.add_parser("dh-star", help="star vertex-minor on a distance-hereditary graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--targets", required=True)
    s.add_argument("--no-dh-check", action="store_true")
    s.set_defaults(func=cmd_dh_star)

    s = sub.add_parser("small", help="connected target on at most three vertices")
    s.add_argument("--graph", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--shape", choices=("star", "triangle", "path"), default="star")
    s.add_argument("--center")
    s.set_defaults(func=cmd_small)

    s = sub.add_parser("ksoet", help="semi-ordered Eulerian tour search")
    s.add_argument("--multigraph")
    s.add_argument("--word")
    s.add_argument("--marked", required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_PATH_BUDGET)
    s.add_argument("--max-marked", type=int, default=DEFAULT_MAX_MARKED)
    s.set_defaults(func=cmd_ksoet)

    s = sub.add_parser("expand", help="triangular expansion of a cubic graph")
    s.add_argument("--cubic", required=True)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("reduce", help="reductions between problems")
    s.add_argument("kind", choices=("cubham-to-starvm",))
    s.add_argument("--cubic", required=True)
    s.add_argument("--decide", action="store_true", help="also answer via Hamiltonicity")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("gen-dh", help="random distance-hereditary graph with its growth trace")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--p-leaf", type=float, default=1 / 3)
    s.add_argument("--p-false", type=float, default=1 / 3)
    s.add_argument("--p-true", type=float, default=1 / 3)
    s.set_defaults(func=cmd_gen_dh)

    s = sub.add_parser("gen-cubic", help="random cubic graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_gen_cubic)

    s = sub.add_parser("verify", help="check a plan on stabilizer states")
    s.add_argument("--graph", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--plan", required=True)
    s.add_argument("--cap", type=int, default=DEFAULT_QUBIT_CAP)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", help="runtime benchmark")
    s.add_argument("--algo", choices=ALGORITHMS, default="dh-star")
    s.add_argument("--sizes", default="10..200")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--targets", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("convert", help="convert between formats")
    s.add_argument("--graph")
    s.add_argument("--multigraph")
    s.add_argument("--word")
    s.add_argument("--to", required=True, choices=("text", "json", "dot", "graph", "multigraph"))
    s.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (VertexMinorError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())

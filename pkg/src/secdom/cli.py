"""Command-line front end.

Graphs flow through stdin/stdout in the edge-list format so subcommands
compose via pipes, e.g.::

    secdom gen path 10 | secdom solve insdom
    secdom gen cycle 5 | secdom solve insdom        # exits 2, prints "absent"
    secdom gen complete 3 | secdom reduce gp | secdom solve insdom

Exit codes: 0 success, 1 usage error, 2 infeasible / absent answer / failed
verification, 3 budget exhausted or unresolved.

Budget defaults honor the environment variables SECDOM_MAX_N,
SECDOM_MAX_CANDIDATES, and SECDOM_TIME_LIMIT.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classes import (
    PebStatus,
    bipartition,
    perfect_edge_elimination,
    recognize_threshold,
    split_partition,
    threshold_insds,
)
from .families import ClosedFormResult, GridWitnessError, closed_form
from .graphs import FamilySpec, Graph, GraphError, parse_graph, serialize_graph
from .reductions import (
    ReductionOutput,
    apx_gadget,
    bipartite_dom_to_peb,
    gp_graph,
    indm_to_insdm,
    parse_set_cover,
    setcover_to_split,
)
from .solve import SearchBudget, Solution, solve, solve_decision
from .verify import VARIANT_BY_TOKEN, verify_set

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ABSENT = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _budget_from(args) -> SearchBudget:
    def pick(flag_value, env_name, default, cast):
        if flag_value is not None:
            return flag_value
        env = os.environ.get(env_name)
        return cast(env) if env else default

    return SearchBudget(
        max_n=pick(args.max_n, "SECDOM_MAX_N", 24, int),
        max_candidates=pick(args.max_candidates, "SECDOM_MAX_CANDIDATES", 100_000_000, int),
        time_limit=pick(args.time_limit, "SECDOM_TIME_LIMIT", 60.0, float),
    )


def _read_text(args) -> str:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _read_graph(args) -> Graph:
    text = _read_text(args)
    fmt = "json" if text.lstrip().startswith("{") else "edge-list"
    return parse_graph(text, fmt)


def _parse_vertex_set(spec: str) -> frozenset[int]:
    spec = spec.strip()
    if not spec or spec == "-":
        return frozenset()
    try:
        return frozenset(int(tok) for tok in spec.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad vertex set {spec!r}: expected comma-separated integers") from exc


def _fmt_vertices(vs) -> str:
    return ",".join(str(v) for v in sorted(vs)) if vs else "-"


def format_solution_text(sol: Solution) -> str:
    lines = []
    if sol.value is None:
        lines.append("absent" if sol.exhausted else "unknown")
    else:
        lines.append(f"value {sol.value}")
        lines.append(f"witness {_fmt_vertices(sol.witness)}")
    lines.append(f"exhausted {str(sol.exhausted).lower()}")
    return "\n".join(lines) + "\n"


def _solution_json(sol: Solution) -> dict:
    return {
        "value": sol.value,
        "witness": sorted(sol.witness) if sol.witness is not None else None,
        "explored": sol.explored,
        "exhausted": sol.exhausted,
    }


def _graph_json(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        label = g.label(v)
        lines.append(f'  {v} [label="{label}"];' if label else f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_graph(g: Graph, fmt: str, out) -> None:
    if fmt == "dot":
        out.write(to_dot(g))
    elif fmt == "json":
        out.write(serialize_graph(g, "json"))
    else:
        out.write(serialize_graph(g, "edge-list"))


def build_parser() -> _Parser:
    parser = _Parser(prog="secdom", description="graph domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a named family graph")
    p_gen.add_argument("family", help="path|cycle|complete|complete-bipartite|star|wheel|grid|apex")
    p_gen.add_argument("params", nargs="*", help="family size parameters")
    p_gen.add_argument("--format", choices=["edge-list", "json", "dot"], default="edge-list")
    p_gen.add_argument("--input", help="base graph file for apex (default: stdin)")

    p_solve = sub.add_parser("solve", help="exact minimum solve (graph on stdin)")
    p_solve.add_argument("variant", choices=sorted(VARIANT_BY_TOKEN))
    p_solve.add_argument("--k", type=int, default=None, help="decision mode: feasible set of size <= k?")
    p_solve.add_argument("--input", help="read graph from file instead of stdin")
    p_solve.add_argument("--format", choices=["text", "json"], default="text")
    p_solve.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_solve.add_argument("--max-candidates", dest="max_candidates", type=int, default=None)
    p_solve.add_argument("--time-limit", dest="time_limit", type=float, default=None)

    p_verify = sub.add_parser("verify", help="check a set against a variant (graph on stdin)")
    p_verify.add_argument("variant", choices=sorted(VARIANT_BY_TOKEN))
    p_verify.add_argument("--set", required=True, help="comma-separated vertex ids ('-' for empty)")
    p_verify.add_argument("--input", help="read graph from file instead of stdin")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")

    p_rec = sub.add_parser("recognize", help="recognize a graph class (graph on stdin)")
    p_rec.add_argument("klass", choices=["bipartite", "split", "threshold", "peb"])
    p_rec.add_argument("--input", help="read graph from file instead of stdin")
    p_rec.add_argument("--format", choices=["text", "json"], default="text")

    p_red = sub.add_parser("reduce", help="build a reduction gadget (input on stdin)")
    p_red.add_argument("which", choices=["setcover", "peb", "insdm", "gp", "apx"])
    p_red.add_argument("--input", help="read input from file instead of stdin")
    p_red.add_argument("--format", choices=["edge-list", "json", "dot"], default="edge-list")
    p_red.add_argument(
        "--y1-rule",
        choices=["no-pendant-neighbor", "pendant-neighbor"],
        default="no-pendant-neighbor",
        help="peb only: which Y vertices receive pendant paths",
    )

    p_fam = sub.add_parser("family", help="closed-form value for a named family")
    p_fam.add_argument("family")
    p_fam.add_argument("params", nargs="*")
    p_fam.add_argument("--input", help="base graph file for apex (default: stdin)")
    p_fam.add_argument("--format", choices=["text", "json"], default="text")
    p_fam.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_fam.add_argument("--max-candidates", dest="max_candidates", type=int, default=None)
    p_fam.add_argument("--time-limit", dest="time_limit", type=float, default=None)

    return parser


def _family_spec(args) -> FamilySpec:
    tokens = [args.family] + list(args.params)
    if tokens[0] in ("apex", "apex-join", "apex_join"):
        base = _read_graph(args)
        return FamilySpec.from_tokens(tokens, base)
    return FamilySpec.from_tokens(tokens)


def _cmd_gen(args, out) -> int:
    spec = _family_spec(args)
    _emit_graph(spec.build(), args.format, out)
    return EXIT_OK


def _cmd_solve(args, out) -> int:
    g = _read_graph(args)
    budget = _budget_from(args)
    variant = VARIANT_BY_TOKEN[args.variant]
    if args.k is not None:
        dec = solve_decision(g, variant, args.k, budget)
        if args.format == "json":
            out.write(json.dumps({"answer": dec.answer,
                                  "witness": sorted(dec.witness) if dec.witness is not None else None,
                                  "explored": dec.explored}) + "\n")
        else:
            out.write(dec.answer + "\n")
            if dec.witness is not None:
                out.write(f"witness {_fmt_vertices(dec.witness)}\n")
        return {"yes": EXIT_OK, "no": EXIT_ABSENT, "unknown": EXIT_BUDGET}[dec.answer]
    sol = solve(g, variant, budget)
    if args.format == "json":
        out.write(json.dumps(_solution_json(sol)) + "\n")
    else:
        out.write(format_solution_text(sol))
    if sol.value is not None:
        return EXIT_OK
    return EXIT_ABSENT if sol.exhausted else EXIT_BUDGET


def _cmd_verify(args, out) -> int:
    g = _read_graph(args)
    variant = VARIANT_BY_TOKEN[args.variant]
    report = verify_set(g, _parse_vertex_set(args.set), variant)
    if args.format == "json":
        out.write(json.dumps({
            "variant": variant.value,
            "holds": report.holds,
            "violations": [
                {"kind": v.kind, "vertices": list(v.vertices),
                 "failed_defenders": list(v.failed_defenders)}
                for v in report.violations
            ],
        }) + "\n")
    else:
        if report.holds:
            out.write("holds\n")
        else:
            out.write("violated\n")
            for v in report.violations:
                detail = " ".join(str(x) for x in v.vertices)
                if v.kind == "undefendable":
                    detail += f" (tried {_fmt_vertices(v.failed_defenders)})"
                out.write(f"{v.kind} {detail}".rstrip() + "\n")
    return EXIT_OK if report.holds else EXIT_ABSENT


def _cmd_recognize(args, out) -> int:
    g = _read_graph(args)
    klass = args.klass
    as_json = args.format == "json"

    if klass == "bipartite":
        parts = bipartition(g)
        if as_json:
            doc = None if parts is None else {"x": sorted(parts[0]), "y": sorted(parts[1])}
            out.write(json.dumps({"bipartite": parts is not None, "parts": doc}) + "\n")
        elif parts is None:
            out.write("not bipartite\n")
        else:
            out.write(f"bipartite\nx {_fmt_vertices(parts[0])}\ny {_fmt_vertices(parts[1])}\n")
        return EXIT_OK if parts is not None else EXIT_ABSENT

    if klass == "split":
        part = split_partition(g)
        if as_json:
            doc = None if part is None else {"clique": sorted(part.clique), "independent": sorted(part.independent)}
            out.write(json.dumps({"split": part is not None, "partition": doc}) + "\n")
        elif part is None:
            out.write("not split\n")
        else:
            out.write(f"split\nclique {_fmt_vertices(part.clique)}\nindependent {_fmt_vertices(part.independent)}\n")
        return EXIT_OK if part is not None else EXIT_ABSENT

    if klass == "threshold":
        cert = recognize_threshold(g)
        if as_json:
            doc = None if cert is None else {
                "clique_order": list(cert.clique_order),
                "independent_order": list(cert.independent_order),
            }
            out.write(json.dumps({"threshold": cert is not None, "certificate": doc}) + "\n")
        elif cert is None:
            out.write("not threshold\n")
        else:
            out.write("threshold\n")
            out.write(f"clique-order {_fmt_vertices_ordered(cert.clique_order)}\n")
            out.write(f"independent-order {_fmt_vertices_ordered(cert.independent_order)}\n")
            insds = threshold_insds(g) if _is_connected_nonempty(g) else None
            if insds is not None:
                out.write(f"insds {_fmt_vertices(insds)}\n")
        return EXIT_OK if cert is not None else EXIT_ABSENT

    result = perfect_edge_elimination(g)
    if as_json:
        doc = None
        if result.ordering is not None:
            doc = [list(e) for e in result.ordering.edges]
        out.write(json.dumps({"status": result.status.value, "ordering": doc}) + "\n")
    elif result.status is PebStatus.FOUND:
        out.write("peb\n")
        out.write("sigma " + " ".join(f"({u},{v})" for u, v in result.ordering.edges) + "\n")
    else:
        out.write(f"{'not peb' if result.status is PebStatus.ABSENT else 'unresolved'}\n")
    if result.status is PebStatus.FOUND:
        return EXIT_OK
    return EXIT_ABSENT if result.status is PebStatus.ABSENT else EXIT_BUDGET


def _fmt_vertices_ordered(vs) -> str:
    return ",".join(str(v) for v in vs) if vs else "-"


def _is_connected_nonempty(g: Graph) -> bool:
    from .graphs import is_connected

    return g.n >= 1 and is_connected(g)


def _cmd_reduce(args, out) -> int:
    text = _read_text(args)
    which = args.which
    if which == "setcover":
        red = setcover_to_split(parse_set_cover(text))
    else:
        fmt = "json" if text.lstrip().startswith("{") else "edge-list"
        g = parse_graph(text, fmt)
        if which == "peb":
            red = bipartite_dom_to_peb(g, y1_rule=args.y1_rule)
        elif which == "insdm":
            red = indm_to_insdm(g)
        elif which == "gp":
            red = gp_graph(g)
        else:
            red = apx_gadget(g)
    if args.format == "json":
        doc = {
            "kind": red.kind,
            "graph": _graph_json(red.graph),
            "offset": red.offset,
            "roles": red.roles,
            "gadget_variant": red.gadget_variant.value,
        }
        out.write(json.dumps(doc) + "\n")
    elif args.format == "dot":
        out.write(to_dot(red.graph))
    else:
        out.write(f"# reduction {red.kind}, offset {red.offset}\n")
        for name in sorted(red.roles):
            out.write(f"# role {name} {red.roles[name]}\n")
        out.write(serialize_graph(red.graph, "edge-list"))
    return EXIT_OK


def _cmd_family(args, out) -> int:
    spec = _family_spec(args)
    budget = _budget_from(args)
    result: ClosedFormResult = closed_form(spec, budget)
    if args.format == "json":
        out.write(json.dumps({
            "value": result.value,
            "witness": sorted(result.witness) if result.witness is not None else None,
            "source": result.source,
        }) + "\n")
    else:
        if result.value is None:
            out.write("absent\n")
        else:
            out.write(f"value {result.value}\n")
            if result.witness is not None:
                out.write(f"witness {_fmt_vertices(result.witness)}\n")
        out.write(f"source {result.source}\n")
    return EXIT_OK if result.value is not None else EXIT_ABSENT


_COMMANDS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "recognize": _cmd_recognize,
    "reduce": _cmd_reduce,
    "family": _cmd_family,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, sys.stdout)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, GridWitnessError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

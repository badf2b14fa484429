"""Command-line interface.

Exit codes: 0 success, 1 a verification found violations, 2 usage or input
errors, 3 a search budget ran out before an answer was certified.
"""

from __future__ import annotations

import argparse
import sys

from . import claims, io
from .arrowing import MODES, arrows, verify_colouring
from .colouring import (SetMapping, cycle_free_colouring, free_partition,
                        multipartite_free_colouring, partite_split)
from .constructions import (amalgam, balanced_multipartite, derived_graph,
                            is_strongly_edge_transitive, sum_hypergraph)
from .density import density_report
from .errors import BudgetExceededError, FormatError
from .forests import build_cycle_of_copies, is_forest_of_copies, union_graph
from .graphs import (Graph, Hypergraph, OrderedGraph, is_ev_inseparable,
                     vertex_connectivity)


def _read(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    if text.lstrip().startswith("p "):
        return io.loads_plain(text)
    return io.loads(text)


def _graph_input(path: str, *, ordered: bool | None = None) -> Graph | OrderedGraph:
    obj = _read(path)
    if ordered is True:
        if not isinstance(obj, OrderedGraph):
            raise FormatError(f"{path} must hold an ordered-graph")
        return obj
    if isinstance(obj, OrderedGraph):
        obj = obj.graph
    if not isinstance(obj, Graph):
        raise FormatError(f"{path} must hold a graph")
    return obj


def _hypergraph_input(path: str) -> Hypergraph:
    obj = _read(path)
    if not isinstance(obj, Hypergraph):
        raise FormatError(f"{path} must hold a linear-hypergraph")
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_object(obj, args) -> None:
    text = io.dumps_plain(obj) if args.format == "plain" else io.dumps(obj)
    _emit(text, args.out)


def _output_flags(sub, formats=("json", "plain")):
    sub.add_argument("--out", help="output path (default: stdout)")
    sub.add_argument("--format", choices=formats, default=formats[0])


def _cmd_gen(args) -> int:
    if args.target == "amalgam":
        template = _graph_input(args.template)
        _emit_object(amalgam(template, args.m).graph, args)
    elif args.target == "sum-hypergraph":
        _emit_object(sum_hypergraph(args.n), args)
    elif args.target == "derived-graph":
        _emit_object(derived_graph(_hypergraph_input(args.input)), args)
    elif args.target == "multipartite":
        _emit_object(balanced_multipartite(args.parts, args.part_size), args)
    else:
        template = _graph_input(args.template)
        system = build_cycle_of_copies(template, args.length)
        if args.format == "plain":
            raise FormatError("plain format cannot carry a copy-system")
        _emit(io.dumps(system), args.out)
    return 0


def _cmd_analyze(args) -> int:
    if args.target == "inseparable":
        report = is_ev_inseparable(_hypergraph_input(args.input))
        if report.ok:
            _emit("inseparable = true\n", args.out)
        else:
            witness = " ".join(str(x) for x in sorted(report.witness or ()))
            _emit(f"inseparable = false, {report.reason} [{witness}]\n", args.out)
        return 0
    g = _graph_input(args.input)
    if args.target == "density":
        report = density_report(g)
        flag = "true" if report.strictly_balanced else "false"
        _emit(f"d2 = {report.d2}, m2 = {report.m2}, "
              f"strictly-2-balanced = {flag}\n", args.out)
    elif args.target == "connectivity":
        _emit(f"connectivity = {vertex_connectivity(g)}\n", args.out)
    else:
        flag = "true" if is_strongly_edge_transitive(g) else "false"
        _emit(f"strongly-edge-transitive = {flag}\n", args.out)
    return 0


def _copy_system_input(path: str):
    obj = _read(path)
    if not hasattr(obj, "copies"):
        raise FormatError(f"{path} must hold a copy-system")
    return obj


def _cmd_forest(args) -> int:
    system = _copy_system_input(args.input)
    if args.target == "union":
        _emit_object(union_graph(system), args)
        return 0
    verdict = is_forest_of_copies(system, node_budget=args.budget)
    if verdict.is_forest is None:
        raise BudgetExceededError("forest recognition ran out of budget")
    if not verdict.is_forest:
        _emit("forest = false\n", args.out)
        return 0
    lines = ["forest = true"]
    cert = verdict.certificate
    lines.append("ordering: " + " ".join(str(i) for i in cert.ordering))
    lines.append(f"copy {cert.ordering[0]}: fresh")
    for i, junction in zip(cert.ordering[1:], cert.junctions):
        if junction[0] == "empty":
            lines.append(f"copy {i}: fresh")
        elif junction[0] == "vertex":
            lines.append(f"copy {i}: shares vertex {junction[1]}")
        else:
            shared = " ".join(str(x) for x in junction[1])
            lines.append(f"copy {i}: shares edge {shared}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_colour(args) -> int:
    if args.target == "free-partition":
        f = _read(args.input)
        if not isinstance(f, SetMapping):
            raise FormatError(f"{args.input} must hold a set-mapping")
        k = args.k if args.k is not None else max(
            (len(img) for img in f.images), default=0)
        classes = free_partition(f, k)
        lines = [f"classes = {len(classes)}"]
        lines.extend(
            f"class {i}: " + " ".join(str(x) for x in cls)
            for i, cls in enumerate(classes))
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    if args.target == "split":
        host = _graph_input(args.input, ordered=True)
        split = partite_split(host, args.parts, seed=args.seed)
        total = len(host.graph.edges)
        cross = len(split.e_fwd) + len(split.e_bwd)
        lines = [f"classes = {len(split.classes)}, cross = {cross} of {total}"]
        lines.extend(
            f"class {i}: " + " ".join(str(v) for v in cls)
            for i, cls in enumerate(split.classes))
        lines.extend(f"fwd {u} {v}" for u, v in sorted(split.e_fwd))
        lines.extend(f"bwd {u} {v}" for u, v in sorted(split.e_bwd))
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    host = _graph_input(args.input)
    if args.target == "multipartite":
        template = _graph_input(args.template)
        col = multipartite_free_colouring(host, template, args.m)
    else:
        col = cycle_free_colouring(host, args.length, args.m)
    _emit(io.dumps_colouring(col, "nni"), args.out)
    return 0


def _cmd_arrow(args) -> int:
    host = _graph_input(args.host)
    template = _graph_input(args.template)
    if args.target == "decide":
        result = arrows(host, template, args.r, mode=args.mode,
                        node_budget=args.budget)
        lines = [f"arrows = {'true' if result.arrows else 'false'}"]
        text = "\n".join(lines) + "\n"
        if result.witness is not None:
            text += io.dumps_colouring(result.witness, args.mode)
        _emit(text, args.out)
        return 0
    with open(args.colouring, encoding="utf-8") as fh:
        col = io.loads_colouring(fh.read(), host)
    mode = args.mode or col.meta.get("mode", "nni")
    bad = verify_colouring(host, template, col, mode=mode)
    lines = [f"monochromatic copies = {len(bad)}"]
    for emb in bad:
        colour = col.colour_of[min(
            tuple(sorted((emb.images[a], emb.images[b])))
            for a, b in template.edges)]
        lines.append("copy: " + " ".join(str(v) for v in emb.images)
                     + f" (colour {colour})")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if bad else 0


def _cmd_verify(args) -> int:
    results = claims.run_suite(args.suite, seed=args.seed, n=args.n)
    _emit("".join(r.line() + "\n" for r in results), args.out)
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseykit",
        description="Construct, analyze, colour and arrow small graphs "
                    "and linear hypergraphs.")
    parser.add_argument("--threads", type=int, default=1,
                        help="reserved; results never depend on it")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="construct objects")
    gen_sub = gen.add_subparsers(dest="target", required=True)
    p = gen_sub.add_parser("amalgam")
    p.add_argument("--template", required=True)
    p.add_argument("--m", type=int, required=True)
    _output_flags(p)
    p = gen_sub.add_parser("sum-hypergraph")
    p.add_argument("--n", type=int, required=True)
    _output_flags(p)
    p = gen_sub.add_parser("derived-graph")
    p.add_argument("--input", required=True)
    _output_flags(p)
    p = gen_sub.add_parser("multipartite")
    p.add_argument("--parts", type=int, required=True)
    p.add_argument("--part-size", type=int, required=True)
    _output_flags(p)
    p = gen_sub.add_parser("cycle-of-copies")
    p.add_argument("--template", required=True)
    p.add_argument("--length", type=int, required=True)
    _output_flags(p)
    gen.set_defaults(run=_cmd_gen)

    analyze = commands.add_parser("analyze", help="compute invariants")
    analyze_sub = analyze.add_subparsers(dest="target", required=True)
    for name in ("density", "connectivity", "inseparable", "edge-transitive"):
        p = analyze_sub.add_parser(name)
        p.add_argument("--input", required=True)
        p.add_argument("--out")
    analyze.set_defaults(run=_cmd_analyze)

    forest = commands.add_parser("forest", help="copy-system recognition")
    forest_sub = forest.add_subparsers(dest="target", required=True)
    p = forest_sub.add_parser("recognize")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--out")
    p = forest_sub.add_parser("union")
    p.add_argument("--input", required=True)
    _output_flags(p)
    forest.set_defaults(run=_cmd_forest)

    colour = commands.add_parser("colour", help="produce colourings")
    colour_sub = colour.add_subparsers(dest="target", required=True)
    p = colour_sub.add_parser("free-partition")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p = colour_sub.add_parser("multipartite")
    p.add_argument("--input", required=True)
    p.add_argument("--template", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    p = colour_sub.add_parser("cycle")
    p.add_argument("--input", required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    p = colour_sub.add_parser("split")
    p.add_argument("--input", required=True)
    p.add_argument("--parts", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    colour.set_defaults(run=_cmd_colour)

    arrow = commands.add_parser("arrow", help="decide and verify arrowing")
    arrow_sub = arrow.add_subparsers(dest="target", required=True)
    p = arrow_sub.add_parser("decide")
    p.add_argument("--host", required=True)
    p.add_argument("--template", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="nni")
    p.add_argument("--budget", type=int, default=5_000_000)
    p.add_argument("--out")
    p = arrow_sub.add_parser("verify")
    p.add_argument("--host", required=True)
    p.add_argument("--template", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--out")
    arrow.set_defaults(run=_cmd_arrow)

    verify = commands.add_parser("verify", help="run verification suites")
    verify_sub = verify.add_subparsers(dest="target", required=True)
    p = verify_sub.add_parser("paper-claims")
    p.add_argument("--suite", required=True, choices=sorted(claims.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    verify.set_defaults(run=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except FormatError as exc:
        print(f"ramseykit: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"ramseykit: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError) as exc:
        print(f"ramseykit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

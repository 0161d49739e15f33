"""Command-line front end.

Exit codes: 0 success, 1 a verification found failures, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import solver
from .corona import corona_k1, f_corona, load_construction_spec, p_corona, s2_subdivision
from .formulas import f_corona_predict, gamma_a_closed, gamma_closed, p_corona_predict, s2_predict
from .graph import Graph, GraphError
from .io import parse_graph, sniff_format, write_graph
from .trees import find_witness_partition, is_corona_graph
from .verify import THEOREMS, RunConfig, UnknownTheoremError, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    text = _read(args.file)
    fmt = sniff_format(text) if args.format == "auto" else args.format
    return parse_graph(text, fmt)


def _load_spec(path: str):
    try:
        return load_construction_spec(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def _set_text(vs) -> str:
    return " ".join(map(str, vs.to_list()))


def _emit_value(G: Graph, res: solver.DominationResult, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"n": G.n, "value": res.value, "witness": res.witness.to_list()}))
    else:
        print(res.value)
        print(_set_text(res.witness))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gamma(args) -> int:
    G = _load_graph(args)
    _emit_value(G, solver.gamma(G, method=args.method), args.json)
    return EXIT_OK


def cmd_gamma_a(args) -> int:
    G = _load_graph(args)
    _emit_value(G, solver.gamma_a(G, method=args.method), args.json)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    G = _load_graph(args)
    sets = solver.min_accurate_dominating_sets(G) if args.accurate else solver.min_dominating_sets(G)
    for D in sets:
        print(_set_text(D))
    return EXIT_OK


def _parse_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--set expects comma-separated vertex indices, got {text!r}") from None


def cmd_accurate_check(args) -> int:
    G = _load_graph(args)
    D = G.vertex_set(_parse_set(args.set))
    dominating = solver.is_dominating(G, D)
    accurate = dominating and solver.is_accurate_dominating(G, D)
    print("true" if accurate else "false")
    if not dominating:
        print("not dominating", file=sys.stderr)
    return EXIT_OK


def _build(kind: str, spec) -> Graph:
    if kind == "corona-k1":
        return corona_k1(spec.base)
    if kind == "s2":
        return s2_subdivision(spec.base)
    if kind == "f-corona":
        if spec.family is None:
            raise UsageError("f-corona needs a 'family' entry")
        return f_corona(spec.family)
    if spec.partition is None:
        raise UsageError("p-corona needs a 'partition' entry")
    return p_corona(spec.partition)


def cmd_build(args) -> int:
    H = _build(args.kind, _load_spec(args.spec))
    print(write_graph(H, args.output_format))
    if args.labels:
        for v in range(H.n):
            print(f"{v}\t{H.label_text(v)}", file=sys.stderr)
    if args.figure:
        from .plotting import graph_figure

        witness = solver.gamma_a(H).witness.to_list() if H.n <= solver.solver_cap() else None
        graph_figure(H, args.figure, highlight=witness, title=f"{args.kind} (accurate witness in red)")
    return EXIT_OK


def cmd_recognize_corona(args) -> int:
    print("true" if is_corona_graph(_load_graph(args)) else "false")
    return EXIT_OK


def cmd_tree_witness(args) -> int:
    T = _load_graph(args)
    mode = "constructive" if args.constructive else "brute_force"
    w = find_witness_partition(T, mode)
    if args.json:
        print(json.dumps(None if w is None else w.to_json(T)))
    elif w is None:
        print("none")
    else:
        print(_set_text(w.dominating_set))
        print(f"kappa {w.components_after_removal}")
    return EXIT_OK


def _with_id(path: str, theorem_id: str, many: bool) -> str:
    if not many:
        return path
    p = Path(path)
    return str(p.with_name(f"{p.stem}-{theorem_id}{p.suffix}"))


def cmd_verify(args) -> int:
    ids = list(THEOREMS) if args.theorem_id == "all" else [args.theorem_id]
    many = len(ids) > 1
    reports = []
    for tid in ids:
        cfg = RunConfig(tid, args.max_n, args.exhaustive_n, args.samples, args.seed)
        report = run_check(cfg)
        reports.append(report)
        print(f"{tid}\t{report.status}\t{report.instances_tested}\t{len(report.failures)}\t{report.elapsed_ms}")
        for f in report.failures[: args.show]:
            print(f"  {tid} failure: {json.dumps(f)}", file=sys.stderr)
        if args.figure:
            from .plotting import gap_figure

            gap_figure(report.observations, f"{tid}: {report.status}", _with_id(args.figure, tid, many))
    if args.json:
        doc = reports[0].to_json() if not many else [r.to_json() for r in reports]
        Path(args.json).write_text(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_FAIL


def _prediction_out(pair) -> None:
    g, a = pair
    print(json.dumps({"gamma": g.to_json(), "gamma_a": a.to_json()}))


def cmd_predict(args) -> int:
    what = args.what
    if what in ("gamma", "gamma-a"):
        if not args.args:
            raise UsageError(f"predict {what} needs a family name")
        family, *raw = args.args
        try:
            params = [int(x) for x in raw]
        except ValueError:
            raise UsageError("family parameters must be integers") from None
        fn = gamma_closed if what == "gamma" else gamma_a_closed
        print(fn(family, *params))
        return EXIT_OK
    if len(args.args) != 1:
        raise UsageError(f"predict {what} takes exactly one file")
    if what == "s2":
        text = _read(args.args[0])
        g, a = s2_predict(parse_graph(text, sniff_format(text)))
        print(f"{g} {a}")
        return EXIT_OK
    spec = _load_spec(args.args[0])
    if what == "f-corona":
        if spec.family is None:
            raise UsageError("f-corona needs a 'family' entry")
        gammas = [solver.gamma(F).value for F in spec.family.members]
        _prediction_out(f_corona_predict(spec.family, gammas))
    else:
        if spec.partition is None:
            raise UsageError("p-corona needs a 'partition' entry")
        _prediction_out(p_corona_predict(spec.partition, args.base_kind))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--format", choices=["auto", "edge_list", "graph6"], default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="accudom", description="Exact domination and accurate domination numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("gamma", cmd_gamma), ("gamma-a", cmd_gamma_a)):
        p = sub.add_parser(name, help=f"print {name.replace('-', '_')} and its witness")
        _graph_input(p)
        p.add_argument("--method", choices=["auto", "table", "search"], default="auto")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("enumerate", help="list every minimum (accurate) dominating set")
    _graph_input(p)
    p.add_argument("--accurate", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("accurate-check", help="is the given set accurate dominating")
    _graph_input(p)
    p.add_argument("--set", required=True, help="comma-separated vertex indices")
    p.set_defaults(func=cmd_accurate_check)

    p = sub.add_parser("build", help="construct a corona-type graph from a JSON document")
    p.add_argument("kind", choices=["corona-k1", "f-corona", "p-corona", "s2"])
    p.add_argument("spec")
    p.add_argument("--output-format", choices=["edge_list", "graph6", "dot"], default="edge_list")
    p.add_argument("--labels", action="store_true", help="print vertex labels to stderr")
    p.add_argument("--figure", help="write a drawing of the result to this file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("recognize-corona", help="is the connected graph of the form F o K1")
    _graph_input(p)
    p.set_defaults(func=cmd_recognize_corona)

    p = sub.add_parser("tree-witness", help="gamma-set D of a tree with more than |D| components in T - D")
    _graph_input(p)
    p.add_argument("--constructive", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tree_witness)

    p = sub.add_parser("verify", help="check a theorem against exact search")
    p.add_argument("theorem_id", choices=[*THEOREMS, "all"])
    p.add_argument("--max-n", type=int)
    p.add_argument("--exhaustive-n", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--figure", help="write the gamma_a - gamma distribution here")
    p.add_argument("--show", type=int, default=5, help="failures echoed to stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("predict", help="closed-form values and bounds")
    p.add_argument("what", choices=["gamma", "gamma-a", "f-corona", "p-corona", "s2"])
    p.add_argument("args", nargs="*", help="family and parameters, or an input file")
    p.add_argument("--base-kind", choices=["general", "tree", "cycle"], default="general")
    p.set_defaults(func=cmd_predict)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, UnknownTheoremError, ValueError) as exc:
        print(f"accudom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return main(argv)
    except SystemExit as exc:  # argparse
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

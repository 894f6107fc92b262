"""Command-line entry point.

Every command reads graphs (graph6 lines by default, or ``--format edges``
blocks each starting with an ``n <count>`` header) from the given files or
standard input and writes one JSON object per graph. Colors are integers:
0 = white, 1 = black, 2 = red.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .canonical import audit_propositions, canonical_coloring
from .distinguishing import BudgetExceeded, SearchBudget, cost2, distinguishing_number
from .families import FAMILY_KINDS, NAMED_GRAPHS, FamilySpec, generate_family, named_graph
from .graph import Graph, GraphFormatError, emit_graph6, girth, parse_edge_list, parse_graph6
from .symmetry import CapacityError, automorphisms, motion, transitivity, vertex_types

log = logging.getLogger("subcubic")

EXIT_OK, EXIT_GRAPH_ERROR, EXIT_USAGE = 0, 1, 2

GRAPH_COMMANDS = ("dnumber", "color", "classify", "prove", "girth", "types", "motion", "autgroup", "cost")


def _split_edge_blocks(text: str) -> list[str]:
    blocks: list[list[str]] = []
    for line in text.splitlines():
        if line.split("#", 1)[0].strip().startswith("n "):
            blocks.append([])
        if blocks:
            blocks[-1].append(line)
        elif line.split("#", 1)[0].strip():
            blocks.append([line])
    return ["\n".join(b) for b in blocks]


def read_inputs(args) -> list[tuple[str, Graph | Exception]]:
    """(source description, graph or parse error) for every input graph."""
    items: list[tuple[str, Graph | Exception]] = []
    for name in args.named or []:
        items.append((name, named_graph(name)))
    sources = args.inputs or ([] if args.named else ["-"])
    for src in sources:
        text = sys.stdin.read() if src == "-" else Path(src).read_text()
        if args.format == "edges":
            chunks = _split_edge_blocks(text)
            parse = parse_edge_list
        else:
            chunks = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith(">>")]
            parse = parse_graph6
        for i, chunk in enumerate(chunks, start=1):
            where = f"{src}:{i}"
            try:
                items.append((where, parse(chunk)))
            except GraphFormatError as exc:
                items.append((where, exc))
    return items


def _parse_root(text: str) -> list[int]:
    try:
        root = sorted({int(t) for t in text.replace(",", " ").split()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex set {text!r}; use e.g. 0,1,2") from None
    if not root:
        raise argparse.ArgumentTypeError("root set is empty")
    return root


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _budget(args) -> SearchBudget:
    return SearchBudget(max_vertices=args.max_vertices, max_colorings=args.max_colorings)


def _plot(args, g: Graph, coloring, index: int, root=(0,), title=None) -> str | None:
    if not args.plot:
        return None
    from .plotting import draw_coloring

    out = Path(args.plot)
    out.mkdir(parents=True, exist_ok=True)
    path = draw_coloring(g, coloring, out / f"{args.command}-{index:03d}.png", root, title)
    return str(path)


def run_graph_command(args, g: Graph, index: int) -> dict:
    """The JSON record for one input graph (without the graph6 echo)."""
    cmd = args.command
    if cmd == "dnumber":
        return {"D": distinguishing_number(g, _budget(args))}
    if cmd == "cost":
        return {"cost": cost2(g, _budget(args))}
    if cmd == "girth":
        return {"girth": girth(g)}
    if cmd == "types":
        return {"types": vertex_types(g)}
    if cmd == "motion":
        return {"motion": motion(g, max_vertices=args.max_vertices)}
    if cmd == "autgroup":
        group = automorphisms(g, max_vertices=args.max_vertices)
        t = transitivity(g)
        out = {
            "order": group.order,
            "vertex_orbits": t.vertex_orbits,
            "vertex_transitive": t.vertex_transitive,
            "edge_transitive": t.edge_transitive,
        }
        if args.list:
            out["elements"] = [list(p) for p in group]
        return out
    if cmd == "classify":
        from .structure import classify

        return classify(g).to_json()
    if cmd == "prove":
        from .prover import prove_two_distinguishable

        trace = prove_two_distinguishable(g)
        out = trace.to_json()
        plot = _plot(args, g, trace.coloring, index, title=trace.strategy)
        if plot:
            out["plot"] = plot
        return out
    if cmd == "color":
        coloring, audit = canonical_coloring(g, args.root)
        report = audit_propositions(g, args.root, coloring, audit)
        out = {"coloring": coloring.to_json(), "audit": audit.to_json(), "propositions": report.to_json()}
        plot = _plot(args, g, coloring, index, root=args.root, title=f"rooted at {args.root}")
        if plot:
            out["plot"] = plot
        return out
    raise AssertionError(cmd)


def _emit(args, record: dict) -> None:
    if args.pretty:
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def cmd_generate(args) -> int:
    member = generate_family(FamilySpec(args.kind, args.n, args.d))
    _emit(args, {"graph6": emit_graph6(member.graph), "annotations": member.annotations()})
    return EXIT_OK


def cmd_verify(args) -> int:
    from .corpus import verify_theorem

    report = verify_theorem(args.n_max, args.include_families, jobs=args.jobs)
    for rec in report.records:
        _emit(args, rec.to_json())
    summary = report.summary()
    if args.plot:
        from .plotting import draw_corpus_summary

        Path(args.plot).mkdir(parents=True, exist_ok=True)
        summary["plot"] = str(draw_corpus_summary(report.records, Path(args.plot) / "corpus-summary.png"))
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return EXIT_OK if not report.failures else EXIT_GRAPH_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subcubic",
        description="Distinguishing colorings of graphs with maximum degree 3.",
        epilog="Colors are integers: 0 = white, 1 = black, 2 = red. Output is one JSON object per graph.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--plot", metavar="DIR", help="also write PNG figures into DIR")

    graphs = argparse.ArgumentParser(add_help=False, parents=[common])
    graphs.add_argument("inputs", nargs="*", help="input files ('-' or none for stdin)")
    graphs.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    graphs.add_argument(
        "--named", action="append", choices=sorted(NAMED_GRAPHS), help="add a built-in graph as input"
    )
    graphs.add_argument("--max-vertices", type=_positive, default=24, help="search size limit")
    graphs.add_argument("--max-colorings", type=_positive, default=20_000_000, help="search node limit")

    helps = {
        "dnumber": "exact distinguishing number",
        "cost": "fewest black vertices in a distinguishing 2-coloring",
        "color": "canonical 2-coloring rooted at a vertex set, with its audit",
        "classify": "structural classification (D = 2, 3 or 4)",
        "prove": "constructive distinguishing 2-coloring with a trace",
        "girth": "length of a shortest cycle",
        "types": "vertex types (1, 2, 3 or 6)",
        "motion": "fewest vertices moved by a nontrivial automorphism",
        "autgroup": "automorphism group order, orbits and transitivity",
    }
    for name in GRAPH_COMMANDS:
        p = sub.add_parser(name, parents=[graphs], help=helps[name])
        if name == "color":
            p.add_argument("--root", type=_parse_root, required=True, help="root vertex set, e.g. 0,1,2")
        if name == "autgroup":
            p.add_argument("--list", action="store_true", help="also list every automorphism")

    gen = sub.add_parser("generate", parents=[common], help="build a family member")
    gen.add_argument("kind", choices=FAMILY_KINDS)
    gen.add_argument("n", type=_positive)
    gen.add_argument("--d", type=int, default=3, help="tree degree (T only)")

    ver = sub.add_parser("verify-theorem", parents=[common], help="check the classification on a corpus")
    ver.add_argument("--n-max", type=_positive, default=7)
    ver.add_argument("--include-families", action="store_true", help="also check family members and named graphs")
    ver.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "verify-theorem":
            return cmd_verify(args)
        items = read_inputs(args)
    except ValueError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"subcubic: cannot read input: {exc}", file=sys.stderr)
        return EXIT_GRAPH_ERROR
    status = EXIT_OK
    for index, (where, g) in enumerate(items):
        if isinstance(g, Exception):
            print(f"subcubic: {where}: {g}", file=sys.stderr)
            _emit(args, {"source": where, "error": str(g)})
            status = EXIT_GRAPH_ERROR
            continue
        record = {"graph6": emit_graph6(g)}
        try:
            record.update(run_graph_command(args, g, index))
        except (ValueError, BudgetExceeded, CapacityError) as exc:
            print(f"subcubic: {where}: {exc}", file=sys.stderr)
            record["error"] = str(exc)
            status = EXIT_GRAPH_ERROR
        _emit(args, record)
    return status


if __name__ == "__main__":
    sys.exit(main())

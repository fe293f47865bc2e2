import argparse
import logging
import os
import sys
from typing import *

from . import __version__
from .datasets import REGISTRY, _load_embedded, find_by_counts, get_dataset, load_dataset, verify_dataset
from .entropy import entropy_report, parse_kinds
from .errors import GraphParseError, StructureEntropyError
from .graph import Graph
from .parsers import FORMATS, load_graph_file
from .report import OUTPUTS, GraphSummary, Report, render, vertex_series
from .robustness import LossTable, information_loss, rank_by_loss

logger = logging.getLogger("sehelpkit")

EXIT_VERIFY_MISMATCH = 5


def load_input(source: str, format: Optional[str] = None) -> Graph:
    """A file path, or the name of a bundled dataset."""
    if os.path.exists(source):
        return load_graph_file(source, format)
    entry = REGISTRY.get(source)
    if entry is not None and entry.embedded:
        return load_dataset(source)
    raise GraphParseError(f"no such file or bundled dataset: {source}")


def _prepare(args: argparse.Namespace) -> Graph:
    g = load_input(args.input, args.format)
    if args.weighted:
        g = g.as_weighted()
    elif args.unweighted:
        g = g.as_unweighted()
    logger.debug("loaded %s: n=%d m=%d weighted=%s", args.input, g.n, g.m, g.is_weighted)
    return g


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    g = _prepare(args)
    kinds = parse_kinds(args.measures)
    entropies = entropy_report(g, kinds, workers=args.threads)
    report = Report(
        graph=GraphSummary.of(g, args.input, entropies, workers=args.threads),
        kinds=kinds,
        entropies=entropies,
        vertices=vertex_series(g, entropies) if args.per_vertex else None,
    )
    _emit(render(report, args.output), args.output_file)
    return 0


def cmd_loss(args: argparse.Namespace) -> int:
    g = _prepare(args)
    kinds = parse_kinds(args.measure)
    table = information_loss(
        g,
        kinds,
        workers=args.threads,
        vertices=None if args.all else args.vertex,
        progress=args.progress,
    )
    if args.rank != "none":
        order = rank_by_loss(table, kinds[0], by_magnitude=args.rank == "magnitude")
        position = {label: i for i, label in enumerate(order)}
        table = LossTable(
            baseline=table.baseline,
            kinds=table.kinds,
            rows=tuple(sorted(table.rows, key=lambda row: position[row.vertex])),
        )
    report = Report(
        graph=GraphSummary.of(g, args.input, table.baseline, workers=args.threads),
        kinds=kinds,
        entropies=table.baseline,
        loss=table,
    )
    _emit(render(report, args.output), args.output_file)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    entry = get_dataset(args.name)
    g = load_dataset(args.name, args.input, args.format)
    other = find_by_counts(g.n, g.m)
    if other is not None and other.name != entry.name:
        logger.warning("%s has the node and edge counts of %s, not %s", args.input, other.name, entry.name)
    result = verify_dataset(entry, g, workers=args.threads)

    lines = [f"{'check':<12}{'expected':>12}{'actual':>12}{'tolerance':>11}  status"]
    for check in result.checks:
        if check.passed:
            status = "ok"
        elif check.informational:
            status = "info"
        else:
            status = "MISMATCH"
        actual = "undefined" if check.actual is None else f"{check.actual:.4f}"
        line = f"{check.name:<12}{check.expected:>12.4f}{actual:>12}{check.tolerance:>11g}  {status}"
        if check.note and not check.passed:
            line += f" ({check.note})"
        lines.append(line)
    lines.append(f"{entry.name}: {'ok' if result.ok else 'MISMATCH'}")
    _emit("\n".join(lines) + "\n", args.output_file)
    return 0 if result.ok else EXIT_VERIFY_MISMATCH


def cmd_datasets(args: argparse.Namespace) -> int:
    lines = []
    for entry in REGISTRY.values():
        where = "bundled" if entry.embedded else "user-supplied"
        lines.append(
            f"{entry.name:<16}{entry.expected_nodes:>6}{entry.expected_edges:>7}  "
            f"{where:<14}{entry.description}"
        )
    _emit("\n".join(lines) + "\n", args.output_file)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sehelpkit", description="Structure entropies of complex networks"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-d", "--debug", action="store_true", default=False, help="Enable debug mode"
    )
    common.add_argument("--output-file", metavar="PATH", help="write results here instead of stdout")
    common.add_argument(
        "--threads", type=int, default=1, metavar="N", help="worker processes (0 = one per CPU)"
    )

    graph_input = argparse.ArgumentParser(add_help=False, parents=[common])
    graph_input.add_argument("input", metavar="INPUT", help="graph file or bundled dataset name")
    graph_input.add_argument("--format", choices=FORMATS, help="input format (default: by extension)")
    weighting = graph_input.add_mutually_exclusive_group()
    weighting.add_argument("--weighted", action="store_true", help="treat edges as weighted")
    weighting.add_argument("--unweighted", action="store_true", help="ignore edge weights")
    graph_input.add_argument("--output", choices=OUTPUTS, default="table")

    compute = sub.add_parser("compute", parents=[graph_input], help="entropies of a graph")
    compute.add_argument("--measures", default="all", help="comma-separated deg,bet,partition or all")
    compute.add_argument("--per-vertex", action="store_true", help="add per-vertex series")
    compute.set_defaults(func=cmd_compute)

    loss = sub.add_parser("loss", parents=[graph_input], help="node-removal information loss")
    loss.add_argument("--measure", default="all", help="comma-separated deg,bet,partition or all")
    targets = loss.add_mutually_exclusive_group(required=True)
    targets.add_argument("--vertex", action="append", metavar="LABEL", help="remove this vertex (repeatable)")
    targets.add_argument("--all", action="store_true", help="remove every vertex in turn")
    loss.add_argument(
        "--rank",
        choices=("none", "signed", "magnitude"),
        default="none",
        help="order rows by the loss of the first measure",
    )
    loss.add_argument("--progress", action="store_true", help="show a progress bar")
    loss.set_defaults(func=cmd_loss)

    verify = sub.add_parser("verify", parents=[common], help="check a dataset against its published values")
    verify.add_argument("name", metavar="NAME")
    verify.add_argument("--input", metavar="PATH", help="user-supplied copy of the dataset")
    verify.add_argument("--format", choices=FORMATS)
    verify.set_defaults(func=cmd_verify)

    datasets = sub.add_parser("datasets", parents=[common], help="list the dataset registry")
    datasets.set_defaults(func=cmd_datasets)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.func(args)
    except StructureEntropyError as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    finally:
        if args.debug:
            logger.debug("bundled dataset cache: %s", _load_embedded.cache_info())


if __name__ == "__main__":
    sys.exit(main())

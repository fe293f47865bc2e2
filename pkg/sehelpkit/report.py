import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import *

import networkx as nx

from . import __version__
from .centrality import path_counts
from .conventions import REPORT_DECIMALS, conventions_block
from .datasets import find_by_counts
from .entropy import EntropyReport
from .errors import PathCountOverflowError
from .graph import Graph, connected_components, degrees
from .robustness import LossTable
from .utils.extra_typings import Cell, JSONObject, Row

__all__ = [
    "OUTPUTS",
    "GraphSummary",
    "VertexSeries",
    "Report",
    "vertex_series",
    "render",
]

OUTPUTS = ("table", "csv", "json")

# tables and CSV round to REPORT_DECIMALS, JSON keeps full precision
UNDEFINED = "undefined"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphSummary:
    source: str
    nodes: int
    edges: int
    weighted: bool
    components: int
    clustering: float
    # over connected ordered pairs only, in edge-length units when weighted
    average_path_length: Optional[float]
    total_paths: Optional[int] = None
    # a registry row with the same vertex and edge counts
    matches_dataset: Optional[str] = None

    @classmethod
    def of(
        cls,
        g: Graph,
        source: str,
        entropies: Optional[EntropyReport] = None,
        workers: Optional[int] = 1,
    ) -> "GraphSummary":
        counts = entropies.path_counts if entropies is not None else None
        if counts is None:
            try:
                counts = path_counts(g, workers=workers)
            except PathCountOverflowError:
                logger.warning("shortest-path counts overflow; mean path length not reported")
        match = find_by_counts(g.n, g.m)
        return cls(
            source=source,
            nodes=g.n,
            edges=g.m,
            weighted=g.is_weighted,
            components=len(connected_components(g)),
            clustering=nx.average_clustering(g.as_unweighted().to_networkx()),
            average_path_length=counts.average_path_length if counts is not None else None,
            total_paths=counts.total_paths if counts is not None else None,
            matches_dataset=match.name if match is not None else None,
        )

    def describe(self) -> str:
        plural = "" if self.components == 1 else "s"
        kind = "weighted" if self.weighted else "unweighted"
        return (
            f"{self.source}: {self.nodes} nodes, {self.edges} edges, {kind}, "
            f"{self.components} component{plural}"
        )


@dataclass(frozen=True)
class VertexSeries:
    vertex: str
    degree: int
    upsilon: Optional[int]
    bet: Optional[float]
    p_deg: Optional[float]
    p_bet: Optional[float]


def vertex_series(g: Graph, entropies: EntropyReport) -> Tuple[VertexSeries, ...]:
    deg = degrees(g)
    counts = entropies.path_counts
    total = counts.total_paths if counts is not None else 0
    series = []
    for i, label in enumerate(g.node_labels):
        series.append(
            VertexSeries(
                vertex=label,
                degree=deg[i],
                upsilon=counts.upsilon[i] if counts is not None else None,
                bet=counts.upsilon[i] / total if total else None,
                p_deg=entropies.p_deg[i] if entropies.p_deg is not None else None,
                p_bet=entropies.p_bet[i] if entropies.p_bet is not None else None,
            )
        )
    return tuple(series)


@dataclass(frozen=True)
class Report:
    graph: GraphSummary
    kinds: Tuple[str, ...]
    entropies: EntropyReport
    loss: Optional[LossTable] = None
    vertices: Optional[Tuple[VertexSeries, ...]] = None
    version: str = __version__
    conventions: JSONObject = field(default_factory=conventions_block)

    def to_json(self) -> JSONObject:
        out: JSONObject = {
            "graph": {
                "source": self.graph.source,
                "nodes": self.graph.nodes,
                "edges": self.graph.edges,
                "weighted": self.graph.weighted,
                "components": self.graph.components,
                "clustering": self.graph.clustering,
                "average_path_length": self.graph.average_path_length,
                "total_paths": self.graph.total_paths,
                "matches_dataset": self.graph.matches_dataset,
            },
            "conventions": self.conventions,
            "entropies": {kind: self.entropies.value(kind) for kind in self.kinds},
        }
        if self.loss is not None:
            out["loss_rows"] = [
                {
                    "vertex": row.vertex,
                    "degree": row.degree,
                    "bet": row.bet,
                    "h_after": {kind: row.h_after[kind] for kind in self.loss.kinds},
                    "i_loss": {kind: row.i_loss[kind] for kind in self.loss.kinds},
                }
                for row in self.loss
            ]
        if self.vertices is not None:
            out["vertices"] = [
                {
                    "vertex": s.vertex,
                    "degree": s.degree,
                    "upsilon": s.upsilon,
                    "bet": s.bet,
                    "p_deg": s.p_deg,
                    "p_bet": s.p_bet,
                }
                for s in self.vertices
            ]
        out["version"] = self.version
        return out


def _cell(value: Cell) -> str:
    if value is None:
        return UNDEFINED
    if isinstance(value, float):
        return f"{value:.{REPORT_DECIMALS}f}"
    return str(value)


def _entropy_rows(report: Report) -> Tuple[Row, List[Row]]:
    return ["measure", "H"], [[kind, report.entropies.value(kind)] for kind in report.kinds]


def _loss_rows(loss: LossTable) -> Tuple[Row, List[Row]]:
    header: Row = ["vertex", "bet", "degree"]
    for kind in loss.kinds:
        header += [f"H_{kind}", f"I_loss_{kind}"]
    rows = []
    for row in loss:
        cells: Row = [row.vertex, row.bet, row.degree]
        for kind in loss.kinds:
            cells += [row.h_after[kind], row.i_loss[kind]]
        rows.append(cells)
    return header, rows


def _vertex_rows(vertices: Sequence[VertexSeries]) -> Tuple[Row, List[Row]]:
    header: Row = ["vertex", "degree", "upsilon", "bet", "p_deg", "p_bet"]
    return header, [[s.vertex, s.degree, s.upsilon, s.bet, s.p_deg, s.p_bet] for s in vertices]


def _aligned(header: Row, rows: List[Row]) -> List[str]:
    text = [[_cell(c) for c in header]] + [[_cell(c) for c in row] for row in rows]
    widths = [max(len(line[col]) for line in text) for col in range(len(header))]
    # first column (labels) flush left, numbers flush right
    return [
        "  ".join(
            cell.ljust(w) if col == 0 else cell.rjust(w)
            for col, (cell, w) in enumerate(zip(line, widths))
        ).rstrip()
        for line in text
    ]


def render_table(report: Report) -> str:
    summary = report.graph
    lines = [summary.describe()]
    if summary.matches_dataset is not None:
        lines.append(f"counts match registry dataset {summary.matches_dataset}")
    lines.append(f"clustering C: {_cell(summary.clustering)}")
    lines.append(f"mean shortest-path length L: {_cell(summary.average_path_length)}")
    if summary.total_paths is not None:
        lines.append(f"shortest paths (ordered pairs): {summary.total_paths}")
    lines.append("")
    lines += _aligned(*_entropy_rows(report))
    if report.loss is not None:
        lines.append("")
        lines += _aligned(*_loss_rows(report.loss))
    if report.vertices is not None:
        lines.append("")
        lines += _aligned(*_vertex_rows(report.vertices))
    return "\n".join(lines) + "\n"


def render_csv(report: Report) -> str:
    # one table: loss rows, else per-vertex series, else entropies
    if report.loss is not None:
        header, rows = _loss_rows(report.loss)
    elif report.vertices is not None:
        header, rows = _vertex_rows(report.vertices)
    else:
        header, rows = _entropy_rows(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([_cell(c) for c in row] for row in rows)
    return buf.getvalue()


def render_json(report: Report) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


_RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def render(report: Report, output: str = "table") -> str:
    try:
        renderer = _RENDERERS[output]
    except KeyError:
        raise ValueError(f"unknown output {output!r}, expected one of {OUTPUTS}") from None
    return renderer(report)

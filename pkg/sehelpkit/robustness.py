import functools
import logging
from dataclasses import dataclass
from typing import *

from .centrality import path_counts
from .conventions import MIN_LOSS_GRAPH_NODES
from .entropy import KINDS, EntropyReport, entropy_report, parse_kinds
from .errors import GraphTooSmallError, MissingKindError, UnknownVertexError
from .graph import Graph, VertexRef, degrees, label_sort_key, remove_vertex
from .parallel import ordered_map, resolve_workers

__all__ = ["LossRow", "LossTable", "information_loss", "rank_by_loss"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LossRow:
    # None in h_after / i_loss: undefined once the vertex is gone
    vertex: str
    degree: int
    bet: Optional[float]
    h_after: Mapping[str, Optional[float]]
    i_loss: Mapping[str, Optional[float]]


@dataclass(frozen=True)
class LossTable:
    baseline: EntropyReport
    kinds: Tuple[str, ...]
    rows: Tuple[LossRow, ...]

    def row(self, vertex: str) -> LossRow:
        for row in self.rows:
            if row.vertex == vertex:
                return row
        raise UnknownVertexError(vertex)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[LossRow]:
        return iter(self.rows)


def _entropies_without(g: Graph, kinds: Tuple[str, ...], v: int) -> Dict[str, Optional[float]]:
    after = entropy_report(remove_vertex(g, v), kinds, workers=1, strict=False)
    return {kind: after.value(kind) for kind in kinds}


def information_loss(
    g: Graph,
    kinds: Iterable[str] = KINDS,
    workers: Optional[int] = 1,
    vertices: Optional[Iterable[VertexRef]] = None,
    progress: bool = False,
) -> LossTable:
    # loss = H(intact) - H(without v), rows in natural label order
    kinds = parse_kinds(kinds)
    if g.n < MIN_LOSS_GRAPH_NODES:
        raise GraphTooSmallError(
            f"information loss needs at least {MIN_LOSS_GRAPH_NODES} vertices, got {g.n}"
        )
    workers = resolve_workers(workers)

    # an undefined baseline makes every loss undefined, so it is an error here
    baseline = entropy_report(g, kinds, workers=workers)
    counts = baseline.path_counts or path_counts(g, workers=workers)
    deg = degrees(g)

    if vertices is None:
        targets = list(range(g.n))
    else:
        targets = sorted(set(map(g.resolve, vertices)))
    targets.sort(key=lambda i: label_sort_key(g.node_labels[i]))

    logger.info("removing %d of %d vertices, kinds=%s", len(targets), g.n, ",".join(kinds))
    afters = ordered_map(
        functools.partial(_entropies_without, g, kinds),
        targets,
        workers=workers,
        progress=progress,
        desc="removals",
        unit="vertex",
    )

    rows = []
    for v, h_after in zip(targets, afters):
        i_loss = {}
        for kind in kinds:
            before, after = baseline.value(kind), h_after[kind]
            i_loss[kind] = None if after is None else before - after
        rows.append(
            LossRow(
                vertex=g.node_labels[v],
                degree=deg[v],
                bet=counts.upsilon[v] / counts.total_paths if counts.total_paths else None,
                h_after=h_after,
                i_loss=i_loss,
            )
        )
    return LossTable(baseline=baseline, kinds=kinds, rows=tuple(rows))


def rank_by_loss(t: LossTable, kind: str, by_magnitude: bool = False) -> List[str]:
    """Vertices by descending loss, ties by ascending label, undefined last."""
    if kind not in t.kinds:
        raise MissingKindError(f"loss table has no {kind!r} column")

    def key(row: LossRow) -> Tuple[bool, float, Tuple[int, Union[int, str]]]:
        loss = row.i_loss[kind]
        if loss is None:
            return (True, 0.0, label_sort_key(row.vertex))
        return (False, -abs(loss) if by_magnitude else -loss, label_sort_key(row.vertex))

    return [row.vertex for row in sorted(t.rows, key=key)]

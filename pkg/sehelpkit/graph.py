import logging
import re
from collections import deque
from dataclasses import dataclass, field
from typing import *

import networkx as nx
import numpy as np

from .errors import EmptyGraphError, NonPositiveWeightError, UnknownVertexError

__all__ = [
    "Graph",
    "DegreeVector",
    "degrees",
    "remove_vertex",
    "connected_components",
    "label_sort_key",
]

logger = logging.getLogger(__name__)

Label = str
# A vertex is named either by its label or by its dense internal index.
VertexRef = Union[Label, int]
Neighborhood = Tuple[Tuple[int, float], ...]


_integer_label = re.compile(r"[+-]?\d+")


def label_sort_key(label: Label) -> Tuple[int, Union[int, str]]:
    # numeric labels first, numerically
    if _integer_label.fullmatch(label):
        return (0, int(label))
    return (1, label)


@dataclass(frozen=True, eq=False)
class Graph:
    """An immutable undirected graph with positive edge lengths.

    Vertices are addressed by dense indices 0..n-1; `node_labels[i]` is the
    label of vertex i. `adjacency[i]` holds `(neighbor, weight)` pairs sorted by
    neighbor index, and every edge is stored on both endpoints.

    Use `Graph.from_edges` to build one from raw input; it enforces the
    invariants the constructor assumes.
    """

    node_labels: Tuple[Label, ...]
    adjacency: Tuple[Neighborhood, ...]
    is_weighted: bool
    _index: Dict[Label, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index", {label: i for i, label in enumerate(self.node_labels)}
        )

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Tuple[Label, Label, float]],
        nodes: Iterable[Label] = (),
    ) -> "Graph":
        """Build a graph from `(u, v, weight)` triples.

        `nodes` declares vertices up front (isolated ones included); remaining
        labels are appended in order of first appearance in `edges`. Self-loops
        are dropped and parallel edges are merged keeping the minimum weight.
        """
        index: Dict[Label, int] = {}
        labels: List[Label] = []

        def intern(label: Label) -> int:
            i = index.get(label)
            if i is None:
                i = index[label] = len(labels)
                labels.append(label)
            return i

        for label in nodes:
            intern(label)

        lengths: Dict[Tuple[int, int], float] = {}
        for u, v, w in edges:
            if not w > 0:
                raise NonPositiveWeightError(
                    f"edge ({u}, {v}) has non-positive weight {w!r}"
                )
            iu, iv = intern(u), intern(v)
            if iu == iv:
                logger.warning("dropping self-loop on vertex %r", u)
                continue
            key = (iu, iv) if iu < iv else (iv, iu)
            previous = lengths.get(key)
            if previous is None:
                lengths[key] = float(w)
            else:
                if previous != w:
                    logger.debug(
                        "merging parallel edges (%s, %s): keeping %r of %r, %r",
                        u, v, min(previous, w), previous, w,
                    )
                lengths[key] = min(previous, float(w))

        if not labels:
            raise EmptyGraphError("graph has no vertices")

        neighborhoods: List[List[Tuple[int, float]]] = [[] for _ in labels]
        for (iu, iv), w in lengths.items():
            neighborhoods[iu].append((iv, w))
            neighborhoods[iv].append((iu, w))

        return cls(
            node_labels=tuple(labels),
            adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighborhoods),
            is_weighted=any(w != 1.0 for w in lengths.values()),
        )

    @property
    def n(self) -> int:
        return len(self.node_labels)

    @property
    def m(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def __len__(self) -> int:
        return self.n

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._index

    def resolve(self, vertex: VertexRef) -> int:
        """Index of `vertex`, given as a label (str) or an index (int)."""
        if isinstance(vertex, int) and not isinstance(vertex, bool):
            if 0 <= vertex < self.n:
                return vertex
            raise UnknownVertexError(vertex)
        try:
            return self._index[vertex]
        except (KeyError, TypeError):
            raise UnknownVertexError(vertex) from None

    def index_of(self, label: Label) -> int:
        return self.resolve(label)

    def label_of(self, index: int) -> Label:
        return self.node_labels[index]

    def degree(self, vertex: VertexRef) -> int:
        return len(self.adjacency[self.resolve(vertex)])

    def edges(self) -> Iterator[Tuple[int, int, float]]:
        """Each undirected edge once, as `(u, v, weight)` with u < v."""
        for u, nbrs in enumerate(self.adjacency):
            for v, w in nbrs:
                if u < v:
                    yield u, v, w

    def labelled_edges(self) -> Iterator[Tuple[Label, Label, float]]:
        labels = self.node_labels
        for u, v, w in self.edges():
            yield labels[u], labels[v], w

    def map_weights(self, fn: Callable[[int, int, float], float]) -> "Graph":
        return Graph.from_edges(
            (
                (self.node_labels[u], self.node_labels[v], fn(u, v, w))
                for u, v, w in self.edges()
            ),
            nodes=self.node_labels,
        )

    def scaled(self, factor: float) -> "Graph":
        return self.map_weights(lambda u, v, w: w * factor)

    def as_unweighted(self) -> "Graph":
        return Graph(
            node_labels=self.node_labels,
            adjacency=tuple(tuple((v, 1.0) for v, _ in nbrs) for nbrs in self.adjacency),
            is_weighted=False,
        )

    def as_weighted(self) -> "Graph":
        return Graph(
            node_labels=self.node_labels, adjacency=self.adjacency, is_weighted=True
        )

    def csr(self) -> Tuple[np.ndarray, np.ndarray]:
        """`(indptr, indices)`: the neighbours of v are `indices[indptr[v]:indptr[v + 1]]`."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum([len(nbrs) for nbrs in self.adjacency], out=indptr[1:])
        indices = np.fromiter(
            (v for nbrs in self.adjacency for v, _ in nbrs), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.node_labels)
        G.add_weighted_edges_from(self.labelled_edges())
        return G

    def _canonical(self) -> Tuple[FrozenSet[Label], FrozenSet[Tuple[Label, Label, float]]]:
        return (
            frozenset(self.node_labels),
            frozenset(
                (min(a, b), max(a, b), w) for a, b, w in self.labelled_edges()
            ),
        )

    # Two graphs are equal when they have the same labels, the same edges and the
    # same weights, whatever order the input listed them in.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())


@dataclass(frozen=True)
class DegreeVector:
    degree: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.degree)

    def __getitem__(self, index: int) -> int:
        return self.degree[index]

    def __len__(self) -> int:
        return len(self.degree)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degree)


def degrees(g: Graph) -> DegreeVector:
    return DegreeVector(tuple(len(nbrs) for nbrs in g.adjacency))


def remove_vertex(g: Graph, v: VertexRef) -> Graph:
    """`g` without vertex `v` and its incident edges.

    Surviving vertices keep their labels, relative order and edge weights; the
    result may be disconnected and may contain isolated vertices.
    """
    gone = g.resolve(v)
    # old index -> new index, shifting everything after the removed vertex down
    shift = [i if i < gone else i - 1 for i in range(g.n)]
    adjacency = tuple(
        tuple((shift[u], w) for u, w in nbrs if u != gone)
        for i, nbrs in enumerate(g.adjacency)
        if i != gone
    )
    return Graph(
        node_labels=g.node_labels[:gone] + g.node_labels[gone + 1 :],
        adjacency=adjacency,
        is_weighted=g.is_weighted,
    )


def connected_components(g: Graph) -> List[FrozenSet[Label]]:
    seen = [False] * g.n
    components = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        members = [root]
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
                    members.append(v)
        components.append(frozenset(g.node_labels[i] for i in members))
    return components

"""
Path-count betweenness.

υ(i) counts the shortest paths between ordered pairs (s, t), s != i != t, that
pass through i; bet(i) divides it by Σσ_st. Unconnected pairs count nothing.
This is not Freeman's betweenness, see `standard_betweenness`.
"""

import functools
import logging
import math
from dataclasses import dataclass, field
from typing import *

import networkx as nx
import numpy as np

from .conventions import BRUTE_FORCE_MAX_NODES, PAIR_CONVENTION, SIGMA_LIMIT
from .errors import DegenerateGraphError, PathCountOverflowError, SizeLimitError
from .graph import Graph
from .parallel import chunked, ordered_map, resolve_workers
from .shortest_paths import downstream_path_counts, same_length, sssp

__all__ = [
    "PathCounts",
    "BetweennessVector",
    "path_counts",
    "betweenness",
    "brute_force_path_counts",
    "enumerate_shortest_paths",
    "standard_betweenness",
]

logger = logging.getLogger(__name__)

# line_profiler and kernprof
try:
    profile
except NameError:
    profile = lambda f: f

# int64 sweeps hand over to exact Python integers beyond this
INT64_SAFE = 2 ** 62


@dataclass(frozen=True)
class PathCounts:
    upsilon: Tuple[int, ...]
    total_paths: int
    pair_convention: str = PAIR_CONVENTION
    # byproducts of the same sweep, for the mean shortest-path length
    distance_total: float = field(default=0.0, compare=False)
    connected_pairs: int = field(default=0, compare=False)

    def unordered(self) -> "PathCounts":
        if self.pair_convention == "unordered":
            return self
        # on an undirected graph every path is matched by its reverse
        assert self.total_paths % 2 == 0 and all(u % 2 == 0 for u in self.upsilon)
        return PathCounts(
            upsilon=tuple(u // 2 for u in self.upsilon),
            total_paths=self.total_paths // 2,
            pair_convention="unordered",
            distance_total=self.distance_total / 2,
            connected_pairs=self.connected_pairs // 2,
        )

    @property
    def average_path_length(self) -> Optional[float]:
        if not self.connected_pairs:
            return None
        return self.distance_total / self.connected_pairs


@dataclass(frozen=True)
class BetweennessVector:
    bet: Tuple[float, ...]

    def __getitem__(self, index: int) -> float:
        return self.bet[index]

    def __len__(self) -> int:
        return len(self.bet)

    def __iter__(self) -> Iterator[float]:
        return iter(self.bet)


class _Partial(NamedTuple):
    upsilon: List[int]
    total: int
    distance_sums: List[float]  # one per source, in source order
    pairs: int


def _accumulate_by_search(g: Graph, sources: Iterable[int]) -> _Partial:
    upsilon = [0] * g.n
    total = pairs = 0
    distance_sums = []
    for s in sources:
        r = sssp(g, s)
        downstream = downstream_path_counts(r)
        total += downstream[s]
        sigma = r.sigma
        for v in r.order[1:]:
            upsilon[v] += sigma[v] * downstream[v]
        distance_sums.append(math.fsum(r.dist[v] for v in r.order[1:]))
        pairs += len(r.order) - 1
    return _Partial(upsilon, total, distance_sums, pairs)


@profile
def _level_sweep(
    indptr: np.ndarray, indices: np.ndarray, s: int
) -> Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Breadth-first σ and downstream counts from `s`, one frontier at a time.

    Returns `(dist, sigma, downstream)`, or None as soon as a count could leave
    the int64 range.
    """
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.int64)
    dist[s] = 0
    sigma[s] = 1
    frontier = np.array([s], dtype=np.int64)
    levels = []
    depth = 0
    while True:
        starts = indptr[frontier]
        lens = indptr[frontier + 1] - starts
        width = int(lens.sum())
        if width == 0:
            break
        if int(sigma[frontier].max()) * width >= INT64_SAFE:
            return None
        offsets = np.cumsum(lens) - lens
        nbrs = indices[np.arange(width, dtype=np.int64) + np.repeat(starts - offsets, lens)]
        origin = np.repeat(frontier, lens)
        depth += 1
        dist[nbrs[dist[nbrs] < 0]] = depth
        on_dag = dist[nbrs] == depth
        if not on_dag.any():
            break
        u, w = origin[on_dag], nbrs[on_dag]
        np.add.at(sigma, w, sigma[u])
        levels.append((u, w))
        frontier = np.unique(w)

    downstream = np.zeros(n, dtype=np.int64)
    for u, w in reversed(levels):
        if (int(downstream[w].max()) + 1) * len(w) >= INT64_SAFE:
            return None
        np.add.at(downstream, u, downstream[w] + 1)
    if int(sigma.max()) * int(downstream.max()) >= INT64_SAFE:
        return None
    return dist, sigma, downstream


def _accumulate_by_levels(g: Graph, sources: Iterable[int]) -> _Partial:
    indptr, indices = g.csr()
    upsilon = np.zeros(g.n, dtype=np.int64)
    total = pairs = 0
    distance_sums = []
    for s in sources:
        swept = _level_sweep(indptr, indices, s)
        if swept is None:
            logger.debug("source %d: counts exceed int64, recounting exactly", s)
            exact = _accumulate_by_search(g, [s])
            upsilon = upsilon.astype(object) + np.array(exact.upsilon, dtype=object)
            total += exact.total
            distance_sums += exact.distance_sums
            pairs += exact.pairs
            continue
        dist, sigma, downstream = swept
        through = sigma * downstream
        through[s] = 0
        if upsilon.dtype != object and int(upsilon.max()) + int(through.max()) >= INT64_SAFE:
            upsilon = upsilon.astype(object)
        upsilon += through
        total += int(downstream[s])
        reached = dist > 0
        distance_sums.append(float(dist[reached].sum()))
        pairs += int(reached.sum())
    return _Partial([int(u) for u in upsilon], total, distance_sums, pairs)


def _accumulate_sources(g: Graph, sources: Sequence[int]) -> _Partial:
    if g.is_weighted:
        return _accumulate_by_search(g, sources)
    return _accumulate_by_levels(g, sources)


def path_counts(g: Graph, workers: Optional[int] = 1) -> PathCounts:
    """υ(i) for every vertex and Σσ_st, over ordered pairs.

    Sources are split across `workers` processes (0 = one per CPU) and the
    integer partial sums are added in source order, so the result does not
    depend on the worker count.
    """
    workers = resolve_workers(workers)
    sources = range(g.n)
    if workers == 1:
        partials = [_accumulate_sources(g, sources)]
    else:
        partials = ordered_map(
            functools.partial(_accumulate_sources, g),
            chunked(sources, workers * 4),
            workers=workers,
        )
    upsilon, total, pairs = [0] * g.n, 0, 0
    distance_sums: List[float] = []
    for part in partials:
        total += part.total
        pairs += part.pairs
        distance_sums += part.distance_sums
        for v, count in enumerate(part.upsilon):
            upsilon[v] += count

    if total > SIGMA_LIMIT:
        raise PathCountOverflowError(f"total shortest-path count exceeds {SIGMA_LIMIT}")
    logger.debug("path counts: n=%d total=%d", g.n, total)
    return PathCounts(
        upsilon=tuple(upsilon),
        total_paths=total,
        distance_total=math.fsum(distance_sums),
        connected_pairs=pairs,
    )


def betweenness(
    g: Graph, counts: Optional[PathCounts] = None, workers: Optional[int] = 1
) -> BetweennessVector:
    if counts is None:
        counts = path_counts(g, workers=workers)
    if counts.total_paths == 0:
        raise DegenerateGraphError(
            "betweenness is undefined: no two distinct vertices are connected"
        )
    return BetweennessVector(tuple(u / counts.total_paths for u in counts.upsilon))


def _all_pairs_lengths(g: Graph) -> Dict[int, Dict[int, float]]:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_weighted_edges_from(g.edges())
    # rows are defaultdicts; unreachable pairs read as inf
    return nx.floyd_warshall(G, weight="weight")


def enumerate_shortest_paths(
    g: Graph, s: int, t: int, lengths: Optional[Dict[int, Dict[int, float]]] = None
) -> List[Tuple[int, ...]]:
    """Every shortest s-t path as a vertex tuple, by depth-first search.

    Exponential in the worst case. Distances come from Floyd-Warshall, not from
    the BFS/Dijkstra engine, so this can serve as an oracle for it.
    """
    if lengths is None:
        lengths = _all_pairs_lengths(g)
    target = lengths[s][t]
    if s == t or target == float("inf"):
        return []
    to_t = lengths[t]
    paths = []

    def extend(path: List[int], on_path: Set[int], travelled: float) -> None:
        u = path[-1]
        if u == t:
            if same_length(travelled, target):
                paths.append(tuple(path))
            return
        for v, w in g.adjacency[u]:
            if v in on_path:
                continue
            if not same_length(travelled + w + to_t[v], target):
                continue
            path.append(v)
            on_path.add(v)
            extend(path, on_path, travelled + w)
            on_path.discard(v)
            path.pop()

    extend([s], {s}, 0.0)
    return paths


def brute_force_path_counts(g: Graph) -> PathCounts:
    """Exhaustive reference implementation of `path_counts`; n <= 14 only."""
    if g.n > BRUTE_FORCE_MAX_NODES:
        raise SizeLimitError(
            f"brute-force enumeration is limited to {BRUTE_FORCE_MAX_NODES} vertices, got {g.n}"
        )
    lengths = _all_pairs_lengths(g)
    upsilon = [0] * g.n
    total = pairs = 0
    distance_sums = []
    for s in range(g.n):
        row = [lengths[s][t] for t in range(g.n) if t != s and lengths[s][t] != float("inf")]
        distance_sums.append(math.fsum(row))
        pairs += len(row)
        for t in range(g.n):
            if s == t:
                continue
            for path in enumerate_shortest_paths(g, s, t, lengths):
                total += 1
                for v in path[1:-1]:
                    upsilon[v] += 1
    return PathCounts(
        upsilon=tuple(upsilon),
        total_paths=total,
        distance_total=math.fsum(distance_sums),
        connected_pairs=pairs,
    )


def standard_betweenness(g: Graph) -> Tuple[float, ...]:
    # Freeman betweenness over ordered pairs, unnormalised; Brandes accumulation
    cb = [0.0] * g.n
    for s in range(g.n):
        r = sssp(g, s)
        sigma = r.sigma
        delta = [0.0] * g.n
        for v in reversed(r.order):
            acc = 0.0
            for w in r.dag_succ[v]:
                acc += sigma[v] / sigma[w] * (1.0 + delta[w])
            delta[v] = acc
            if v != s:
                cb[v] += acc
    return tuple(cb)

import heapq
import logging
import math
from dataclasses import dataclass, field
from typing import *

from .conventions import SIGMA_LIMIT, TIE_TOLERANCE
from .errors import PathCountOverflowError
from .graph import Graph, VertexRef

__all__ = ["SsspResult", "sssp", "downstream_path_counts", "same_length"]

logger = logging.getLogger(__name__)

# line_profiler and kernprof
try:
    profile
except NameError:
    profile = lambda f: f


@dataclass(frozen=True)
class SsspResult:
    """Shortest-path DAG rooted at `source`.

    `dist[v]` is inf and `sigma[v]` is 0 for vertices unreachable from the
    source. `dag_succ[v]` lists, in ascending index order, the vertices w with
    dist(w) = dist(v) + weight(v, w). `order` holds the reachable vertices by
    non-decreasing distance, source first.
    """

    source: int
    dist: Tuple[float, ...]
    sigma: Tuple[int, ...]
    dag_succ: Tuple[Tuple[int, ...], ...]
    order: Tuple[int, ...] = field(compare=False)

    def reachable(self, v: int) -> bool:
        return self.sigma[v] > 0


def same_length(a: float, b: float) -> bool:
    return abs(a - b) <= TIE_TOLERANCE * max(abs(a), abs(b))


def _check_sigma(sigma: List[int], source: int) -> None:
    worst = max(sigma)
    if worst > SIGMA_LIMIT:
        raise PathCountOverflowError(
            f"shortest-path count from source {source} exceeds {SIGMA_LIMIT}"
        )


@profile
def _bfs(g: Graph, s: int) -> SsspResult:
    adjacency = g.adjacency
    n = g.n
    dist = [-1] * n
    sigma = [0] * n
    succ: List[List[int]] = [[] for _ in range(n)]
    dist[s] = 0
    sigma[s] = 1
    order = [s]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        next_dist = dist[v] + 1
        sigma_v = sigma[v]
        succ_v = succ[v]
        for w, _ in adjacency[v]:
            if dist[w] < 0:
                dist[w] = next_dist
                order.append(w)
            if dist[w] == next_dist:
                sigma[w] += sigma_v
                succ_v.append(w)
    _check_sigma(sigma, s)
    return SsspResult(
        source=s,
        dist=tuple(d if d >= 0 else math.inf for d in dist),
        sigma=tuple(sigma),
        dag_succ=tuple(map(tuple, succ)),
        order=tuple(order),
    )


@profile
def _dijkstra(g: Graph, s: int) -> SsspResult:
    adjacency = g.adjacency
    n = g.n
    dist = [math.inf] * n
    sigma = [0] * n
    pred: List[List[int]] = [[] for _ in range(n)]
    done = [False] * n
    tentative: Dict[int, float] = {s: 0.0}
    order = []
    # (distance, vertex index): equal distances pop in index order
    heap = [(0.0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if done[v] or d != tentative[v]:
            continue
        done[v] = True
        dist[v] = d
        order.append(v)
        sigma[v] = 1 if v == s else sum(sigma[u] for u in pred[v])
        for w, weight in adjacency[v]:
            if done[w]:
                continue
            candidate = d + weight
            best = tentative.get(w)
            if best is None or (candidate < best and not same_length(candidate, best)):
                tentative[w] = candidate
                pred[w] = [v]
                heapq.heappush(heap, (candidate, w))
            elif same_length(candidate, best):
                pred[w].append(v)
    _check_sigma(sigma, s)

    succ: List[List[int]] = [[] for _ in range(n)]
    for w in order:
        for u in pred[w]:
            succ[u].append(w)
    return SsspResult(
        source=s,
        dist=tuple(dist),
        sigma=tuple(sigma),
        dag_succ=tuple(tuple(sorted(vs)) for vs in succ),
        order=tuple(order),
    )


def sssp(g: Graph, s: VertexRef, weighted: Optional[bool] = None) -> SsspResult:
    source = g.resolve(s)
    if weighted is None:
        weighted = g.is_weighted
    return _dijkstra(g, source) if weighted else _bfs(g, source)


def downstream_path_counts(r: SsspResult) -> List[int]:
    # g_s(v): DAG paths of length >= 1 leaving v; sigma(v) * g_s(v) of the
    # source's shortest paths pass through v
    counts = [0] * len(r.sigma)
    succ = r.dag_succ
    for v in reversed(r.order):
        acc = 0
        for w in succ[v]:
            acc += 1 + counts[w]
        counts[v] = acc
    return counts

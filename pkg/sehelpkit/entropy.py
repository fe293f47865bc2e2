"""
Structure entropies.

All three share the Shannon core H = -Σ p ln p (nats, 0 ln 0 = 0) and differ in
the probability vector fed to it:

    deg        p_j = degree(j) / Σ degree
    partition  p_c = |cell c| / N, over the cells of a vertex partition
    bet        p_i = υ(i) / Σ υ, υ being the path-count betweenness
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import *

import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from .centrality import PathCounts, path_counts
from .conventions import DISTRIBUTION_TOLERANCE, ORBIT_ORACLE_MAX_NODES
from .errors import (
    DegenerateDistributionError,
    DegenerateMeasureError,
    EdgelessGraphError,
    InvalidDistributionError,
    InvalidPartitionError,
    MissingKindError,
    SizeLimitError,
)
from .graph import Graph, degrees
from .utils.set_utils import cover_defects

__all__ = [
    "KINDS",
    "ProbabilityVector",
    "Partition",
    "EntropyReport",
    "shannon",
    "degree_distribution",
    "degree_entropy",
    "degree_partition",
    "partition_distribution",
    "partition_entropy",
    "betweenness_distribution",
    "betweenness_entropy",
    "orbit_partition_oracle",
    "entropy_report",
    "parse_kinds",
]

logger = logging.getLogger(__name__)

KINDS = ("deg", "bet", "partition")


@dataclass(frozen=True)
class ProbabilityVector:
    p: Tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.p:
            raise InvalidDistributionError("empty probability vector")
        if any(not 0.0 <= x <= 1.0 for x in self.p):
            raise InvalidDistributionError("probabilities must lie in [0, 1]")
        total = math.fsum(self.p)
        if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
            raise InvalidDistributionError(f"probabilities sum to {total!r}, not 1")

    @classmethod
    def from_weights(cls, weights: Sequence[Union[int, float]]) -> "ProbabilityVector":
        """Normalise nonnegative weights; callers reject an all-zero input first."""
        total = sum(weights)
        return cls(tuple(w / total for w in weights))

    def __len__(self) -> int:
        return len(self.p)

    def __iter__(self) -> Iterator[float]:
        return iter(self.p)

    def __getitem__(self, index: int) -> float:
        return self.p[index]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.p, dtype=float)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty cells of vertex indices covering the whole vertex set."""

    cells: Tuple[FrozenSet[int], ...]

    def validate(self, n: int) -> None:
        defects = cover_defects(self.cells, frozenset(range(n)))
        if defects:
            raise InvalidPartitionError(f"not a partition of {n} vertices: {defects.describe()}")

    def sizes(self) -> Tuple[int, ...]:
        return tuple(map(len, self.cells))

    def labelled(self, g: Graph) -> List[List[str]]:
        return [sorted(g.node_labels[i] for i in cell) for cell in self.cells]

    def __len__(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class EntropyReport:
    """Entropies in nats; a measure that was not requested, or is undefined on
    the graph (see `entropy_report(strict=False)`), is None."""

    h_deg: Optional[float] = None
    h_bet: Optional[float] = None
    h_partition: Optional[float] = None
    p_deg: Optional[ProbabilityVector] = None
    p_bet: Optional[ProbabilityVector] = None
    p_partition: Optional[ProbabilityVector] = None
    path_counts: Optional[PathCounts] = None

    def value(self, kind: str) -> Optional[float]:
        if kind not in KINDS:
            raise MissingKindError(f"unknown entropy kind {kind!r}")
        return getattr(self, f"h_{kind}")

    def distribution(self, kind: str) -> Optional[ProbabilityVector]:
        if kind not in KINDS:
            raise MissingKindError(f"unknown entropy kind {kind!r}")
        return getattr(self, f"p_{kind}")


def shannon(p: Union[ProbabilityVector, Sequence[float]]) -> float:
    """H = -Σ p_i ln p_i, with k = 1 and 0 ln 0 = 0."""
    if not isinstance(p, ProbabilityVector):
        p = ProbabilityVector(tuple(map(float, p)))
    arr = p.as_array()
    nonzero = arr[arr > 0.0]
    h = float(-np.sum(nonzero * np.log(nonzero)))
    # a certain outcome gives -0.0, and entries a hair above 1 a tiny negative
    return h if h > 0.0 else 0.0


def degree_distribution(g: Graph) -> ProbabilityVector:
    deg = degrees(g)
    if deg.total == 0:
        raise EdgelessGraphError("degree entropy is undefined on a graph without edges")
    return ProbabilityVector.from_weights(deg.degree)


def degree_entropy(g: Graph) -> float:
    return shannon(degree_distribution(g))


def degree_partition(g: Graph) -> Partition:
    # cells in ascending degree order
    by_degree: Dict[int, Set[int]] = defaultdict(set)
    for v, d in enumerate(degrees(g)):
        by_degree[d].add(v)
    return Partition(tuple(frozenset(by_degree[d]) for d in sorted(by_degree)))


def partition_distribution(g: Graph, part: Partition) -> ProbabilityVector:
    part.validate(g.n)
    return ProbabilityVector.from_weights(part.sizes())


def partition_entropy(g: Graph, part: Optional[Partition] = None) -> float:
    if part is None:
        part = degree_partition(g)
    return shannon(partition_distribution(g, part))


def betweenness_distribution(counts: PathCounts) -> ProbabilityVector:
    if not any(counts.upsilon):
        raise DegenerateDistributionError(
            "degenerate betweenness distribution: no vertex lies inside a shortest path"
        )
    return ProbabilityVector.from_weights(counts.upsilon)


def betweenness_entropy(
    g: Graph, counts: Optional[PathCounts] = None, workers: Optional[int] = 1
) -> float:
    """Entropy of υ(i)/Συ.

    The Σσ_st denominator of bet(i) cancels in this normalisation, so ordered
    and unordered pair counts give the same value.
    """
    if counts is None:
        counts = path_counts(g, workers=workers)
    return shannon(betweenness_distribution(counts))


def orbit_partition_oracle(g: Graph) -> Partition:
    """Exact automorphism orbits of the unweighted structure; n <= 10 only."""
    if g.n > ORBIT_ORACLE_MAX_NODES:
        raise SizeLimitError(
            f"orbit search is limited to {ORBIT_ORACLE_MAX_NODES} vertices, got {g.n}"
        )
    G = g.as_unweighted().to_networkx()
    orbit_of = {label: {label} for label in G}
    for mapping in GraphMatcher(G, G).isomorphisms_iter():
        for u, v in mapping.items():
            orbit_of[u].add(v)
    index = g.resolve
    orbits = {frozenset(map(index, members)) for members in orbit_of.values()}
    deg = degrees(g)
    return Partition(
        tuple(sorted(orbits, key=lambda cell: (deg[min(cell)], min(cell))))
    )


def parse_kinds(requested: Union[str, Iterable[str]]) -> Tuple[str, ...]:
    if isinstance(requested, str):
        requested = [s.strip() for s in requested.split(",") if s.strip()]
    wanted = set(requested)
    if "all" in wanted:
        return KINDS
    unknown = wanted - set(KINDS)
    if unknown:
        raise MissingKindError(f"unknown entropy kind(s): {', '.join(sorted(unknown))}")
    if not wanted:
        raise MissingKindError("no entropy kind requested")
    return tuple(k for k in KINDS if k in wanted)


def entropy_report(
    g: Graph,
    kinds: Iterable[str] = KINDS,
    workers: Optional[int] = 1,
    strict: bool = True,
) -> EntropyReport:
    """The requested entropies of `g` with their probability vectors.

    A measure that is undefined on `g` raises when `strict`, otherwise it is
    left as None in the report.
    """
    kinds = parse_kinds(kinds)
    fields: Dict[str, Any] = {}

    def attempt(kind: str, distribution: Callable[[], ProbabilityVector]) -> None:
        try:
            p = distribution()
        except DegenerateMeasureError as e:
            if strict:
                raise
            logger.debug("%s entropy undefined: %s", kind, e)
            return
        fields[f"p_{kind}"] = p
        fields[f"h_{kind}"] = shannon(p)

    if "deg" in kinds:
        attempt("deg", lambda: degree_distribution(g))
    if "bet" in kinds:
        counts = path_counts(g, workers=workers)
        fields["path_counts"] = counts
        attempt("bet", lambda: betweenness_distribution(counts))
    if "partition" in kinds:
        attempt("partition", lambda: partition_distribution(g, degree_partition(g)))
    return EntropyReport(**fields)

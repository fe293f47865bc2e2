import functools
import logging
import math
from dataclasses import dataclass
from typing import *

from .entropy import entropy_report
from .errors import StructureEntropyError, UnknownDatasetError
from .graph import Graph
from .parsers import load_graph_file, parse_graph

__all__ = [
    "Expectation",
    "DatasetEntry",
    "Check",
    "Verification",
    "REGISTRY",
    "get_dataset",
    "find_by_counts",
    "load_dataset",
    "verify_dataset",
]

logger = logging.getLogger(__name__)


KARATE_EDGES = """\
# Zachary's Karate Club, 1-based member numbers
1 2
1 3
1 4
1 5
1 6
1 7
1 8
1 9
1 11
1 12
1 13
1 14
1 18
1 20
1 22
1 32
2 3
2 4
2 8
2 14
2 18
2 20
2 22
2 31
3 4
3 8
3 9
3 10
3 14
3 28
3 29
3 33
4 8
4 13
4 14
5 7
5 11
6 7
6 11
6 17
7 17
9 31
9 33
9 34
10 34
14 34
15 33
15 34
16 33
16 34
19 33
19 34
20 34
21 33
21 34
23 33
23 34
24 26
24 28
24 30
24 33
24 34
25 26
25 28
25 32
26 32
27 30
27 34
28 34
29 32
29 34
30 33
30 34
31 33
31 34
32 33
32 34
33 34
"""

PETERSEN_EDGES = """\
# outer 5-cycle
0 1
1 2
2 3
3 4
4 0
# spokes
0 5
1 6
2 7
3 8
4 9
# inner pentagram
5 7
6 8
7 9
8 5
9 6
"""

# The published betweenness-entropy values do not follow from the path-count
# definition on the bundled Karate edge list (computed 2.3269 vs published
# 2.8857), so they are shown but never fail a verification.
_BET_NOTE = "published value not reproducible from the path-count definition"


@dataclass(frozen=True)
class Expectation:
    measure: str
    value: float
    tolerance: float
    informational: bool = False
    note: str = ""


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    expected_nodes: int
    expected_edges: int
    source: Optional[str]
    format: str
    expectations: Tuple[Expectation, ...] = ()
    # count mismatches fail verification; otherwise they only demote the
    # entropy comparisons to informational
    strict_counts: bool = False
    description: str = ""

    @property
    def embedded(self) -> bool:
        return self.source is not None

    def count_mismatches(self, g: Graph) -> List[str]:
        problems = []
        if g.n != self.expected_nodes:
            problems.append(f"{g.n} nodes, expected {self.expected_nodes}")
        if g.m != self.expected_edges:
            problems.append(f"{g.m} edges, expected {self.expected_edges}")
        return problems


def _table4(name: str, nodes: int, edges: int, h_deg: float, h_bet: float, h_partition: float, description: str) -> DatasetEntry:
    return DatasetEntry(
        name=name,
        expected_nodes=nodes,
        expected_edges=edges,
        source=None,
        format="edgelist",
        expectations=(
            Expectation("deg", h_deg, 0.05),
            # gating: only the Karate value is known not to reproduce
            Expectation("bet", h_bet, 0.05),
            Expectation("partition", h_partition, 0.05),
        ),
        description=description,
    )


REGISTRY: Dict[str, DatasetEntry] = {
    entry.name: entry
    for entry in (
        DatasetEntry(
            name="karate",
            expected_nodes=34,
            expected_edges=78,
            source=KARATE_EDGES,
            format="edgelist",
            expectations=(
                Expectation("deg", 3.2609, 0.001),
                # the path-count definition gives 2.3269 here, as do the Freeman and
                # endpoint-inclusive variants
                Expectation("bet", 2.8857, 0.003, informational=True, note=_BET_NOTE),
            ),
            strict_counts=True,
            description="Zachary's Karate Club",
        ),
        DatasetEntry(
            name="petersen",
            expected_nodes=10,
            expected_edges=15,
            source=PETERSEN_EDGES,
            format="edgelist",
            expectations=(
                Expectation("deg", math.log(10), 1e-4),
                Expectation("partition", 0.0, 1e-4),
            ),
            strict_counts=True,
            description="Petersen graph (3-regular, 10 nodes)",
        ),
        _table4("us-airport", 500, 5962, 5.025, 4.7338, 3.1263, "US airport network, 500 busiest airports"),
        _table4("email", 1133, 10902, 6.631, 5.5021, 3.1780, "e-mail network of a university"),
        _table4("yeast", 2375, 23386, 7.0539, 6.0931, 3.0345, "protein-protein interactions in budding yeast"),
        _table4("us-powergrid", 4941, 13188, 8.3208, 5.7191, 1.7018, "Western US power grid"),
        _table4("germany-highway", 1168, 2486, 6.9947, 5.6383, 0.6909, "German highway network"),
    )
}


def get_dataset(name: str) -> DatasetEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownDatasetError(
            f"unknown dataset {name!r}; known: {', '.join(REGISTRY)}"
        ) from None


def find_by_counts(n: int, m: int) -> Optional[DatasetEntry]:
    for entry in REGISTRY.values():
        if (entry.expected_nodes, entry.expected_edges) == (n, m):
            return entry
    return None


@functools.lru_cache(maxsize=8)
def _load_embedded(name: str) -> Graph:
    entry = REGISTRY[name]
    g = parse_graph(entry.source, entry.format)
    problems = entry.count_mismatches(g)
    if problems:
        raise StructureEntropyError(f"bundled dataset {name} is corrupt: {'; '.join(problems)}")
    return g


def load_dataset(name: str, path: Optional[str] = None, format: Optional[str] = None) -> Graph:
    """The graph for a registry entry, from `path` when given, else bundled."""
    entry = get_dataset(name)
    if path is not None:
        return load_graph_file(path, format)
    if not entry.embedded:
        raise UnknownDatasetError(f"dataset {name!r} is not bundled; supply a copy with --input")
    return _load_embedded(name)


@dataclass(frozen=True)
class Check:
    name: str
    expected: float
    actual: Optional[float]
    tolerance: float
    informational: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.actual is not None and abs(self.actual - self.expected) <= self.tolerance


@dataclass(frozen=True)
class Verification:
    dataset: str
    checks: Tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed or check.informational for check in self.checks)


def verify_dataset(entry: DatasetEntry, g: Graph, workers: Optional[int] = 1) -> Verification:
    counts_match = not entry.count_mismatches(g)
    if not counts_match:
        logger.warning("%s: node/edge counts differ from the registered version", entry.name)
    counts_informational = not entry.strict_counts
    checks = [
        Check("nodes", entry.expected_nodes, g.n, 0, informational=counts_informational),
        Check("edges", entry.expected_edges, g.m, 0, informational=counts_informational),
    ]

    kinds = [e.measure for e in entry.expectations]
    report = entropy_report(g, kinds, workers=workers, strict=False) if kinds else None
    for e in entry.expectations:
        note = e.note
        if not counts_match:
            note = "counts differ from the registered version"
        checks.append(
            Check(
                name=f"H_{e.measure}",
                expected=e.value,
                actual=report.value(e.measure),
                tolerance=e.tolerance,
                informational=e.informational or not counts_match,
                note=note,
            )
        )
    return Verification(dataset=entry.name, checks=tuple(checks))

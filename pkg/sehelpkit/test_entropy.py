import math
import random

import pytest
from hypothesis import given, settings
from hypothesis.strategies import data, floats, integers, lists

from .centrality import path_counts
from .datasets import load_dataset
from .entropy import (
    KINDS,
    Partition,
    ProbabilityVector,
    betweenness_entropy,
    degree_distribution,
    degree_entropy,
    degree_partition,
    entropy_report,
    orbit_partition_oracle,
    parse_kinds,
    partition_entropy,
    shannon,
)
from .errors import (
    DegenerateDistributionError,
    EdgelessGraphError,
    InvalidDistributionError,
    InvalidPartitionError,
    MissingKindError,
    SizeLimitError,
)
from .graph import Graph, remove_vertex
from .utils.extra_hypothesis_strategies import connected_graphs
from .utils.set_utils import is_refinement

LN10 = math.log(10)


def test_shannon_small_example() -> None:
    assert shannon([2 / 15, 9 / 15, 4 / 15]) == pytest.approx(0.9276, abs=1e-4)


def test_shannon_extremes() -> None:
    assert shannon([1.0]) == 0.0
    assert shannon([0.0, 1.0, 0.0]) == 0.0
    assert shannon([0.25] * 4) == pytest.approx(math.log(4))


@pytest.mark.parametrize("p", [[], [0.5, 0.6], [1.5, -0.5], [0.3, 0.3]])
def test_shannon_rejects_non_distributions(p) -> None:
    with pytest.raises(InvalidDistributionError):
        shannon(p)


@given(lists(floats(0, 100), min_size=1, max_size=30).filter(lambda ws: sum(ws) > 0))
def test_shannon_bounds(weights) -> None:
    p = ProbabilityVector.from_weights(weights)
    h = shannon(p)
    assert 0.0 <= h <= math.log(len(p)) + 1e-12


@given(integers(1, 5000))
def test_uniform_distribution_reaches_the_bound(n: int) -> None:
    assert abs(shannon([1 / n] * n) - math.log(n)) <= 1e-12


def test_petersen_identities() -> None:
    g = load_dataset("petersen")
    assert abs(degree_entropy(g) - LN10) <= 1e-12
    assert partition_entropy(g) == 0.0
    assert abs(betweenness_entropy(g) - LN10) <= 1e-12


@pytest.mark.parametrize("v", [str(i) for i in range(10)])
def test_petersen_without_a_vertex(v: str) -> None:
    h = remove_vertex(load_dataset("petersen"), v)
    assert (h.n, h.m) == (9, 12)
    assert degree_entropy(h) == pytest.approx(2.1808, abs=1e-4)
    assert partition_entropy(h) == pytest.approx(0.6365, abs=1e-4)


def test_random_weights_change_only_betweenness() -> None:
    g = load_dataset("petersen")
    base = entropy_report(g)
    rng = random.Random(20)
    bet = []
    for _ in range(20):
        h = entropy_report(g.map_weights(lambda u, v, w: rng.uniform(0.5, 5.0)))
        assert h.h_deg == base.h_deg
        assert h.h_partition == base.h_partition
        assert h.p_deg == base.p_deg
        bet.append(h.h_bet)
    assert any(h != base.h_bet for h in bet)


def test_karate() -> None:
    g = load_dataset("karate")
    report = entropy_report(g)
    assert report.h_deg == pytest.approx(3.2609, abs=1e-4)
    assert report.h_bet == pytest.approx(2.326859, abs=1e-6)
    assert report.path_counts.total_paths == 3112
    assert sum(report.p_deg) == pytest.approx(1.0)


@given(connected_graphs())
def test_pair_convention_does_not_matter(g: Graph) -> None:
    counts = path_counts(g)
    if not any(counts.upsilon):
        return
    assert abs(betweenness_entropy(g, counts.unordered()) - betweenness_entropy(g, counts)) <= 1e-12


@given(connected_graphs())
def test_scaling_weights_does_not_matter(g: Graph) -> None:
    before = entropy_report(g, strict=False)
    after = entropy_report(g.scaled(7.3), strict=False)
    for kind in KINDS:
        if before.value(kind) is None:
            assert after.value(kind) is None
        else:
            assert abs(after.value(kind) - before.value(kind)) <= 1e-12


@given(connected_graphs())
def test_entropy_bounds(g: Graph) -> None:
    report = entropy_report(g, strict=False)
    bound = math.log(g.n) + 1e-12
    for kind in KINDS:
        h = report.value(kind)
        if h is not None:
            assert 0.0 <= h <= bound


def test_degenerate_measures() -> None:
    k4 = Graph.from_edges((a, b, 1) for a in "wxyz" for b in "wxyz" if a < b)
    with pytest.raises(DegenerateDistributionError) as excinfo:
        entropy_report(k4, ["bet"])
    assert excinfo.value.exit_code == 3
    assert entropy_report(k4, ["bet"], strict=False).h_bet is None

    edgeless = Graph.from_edges([], nodes=["a", "b"])
    with pytest.raises(EdgelessGraphError):
        degree_distribution(edgeless)
    report = entropy_report(edgeless, strict=False)
    assert (report.h_deg, report.h_bet) == (None, None)
    assert report.h_partition == 0.0


def test_degree_partition_order() -> None:
    g = Graph.from_edges([("a", "b", 1), ("b", "c", 1), ("b", "d", 1)])
    part = degree_partition(g)
    assert part.labelled(g) == [["a", "c", "d"], ["b"]]
    assert part.sizes() == (3, 1)


def test_invalid_partition() -> None:
    g = Graph.from_edges([("a", "b", 1), ("b", "c", 1)])
    with pytest.raises(InvalidPartitionError):
        partition_entropy(g, Partition((frozenset({0, 1}), frozenset({1, 2}))))
    with pytest.raises(InvalidPartitionError):
        partition_entropy(g, Partition((frozenset({0, 1}),)))
    assert partition_entropy(g, Partition((frozenset({0}), frozenset({1, 2})))) == pytest.approx(
        shannon([1 / 3, 2 / 3])
    )


def test_orbits() -> None:
    path = Graph.from_edges([("a", "b", 1), ("b", "c", 1)])
    assert orbit_partition_oracle(path).labelled(path) == [["a", "c"], ["b"]]
    petersen = load_dataset("petersen")
    assert len(orbit_partition_oracle(petersen)) == 1


def test_orbit_size_limit() -> None:
    g = Graph.from_edges((str(i), str(i + 1), 1) for i in range(10))
    with pytest.raises(SizeLimitError):
        orbit_partition_oracle(g)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_nodes=8))
def test_orbits_refine_degree_classes(g: Graph) -> None:
    orbits = orbit_partition_oracle(g)
    orbits.validate(g.n)
    assert is_refinement(orbits.cells, degree_partition(g).cells)


def test_parse_kinds() -> None:
    assert parse_kinds("all") == KINDS
    assert parse_kinds("bet, deg") == ("deg", "bet")
    assert parse_kinds(["partition"]) == ("partition",)
    with pytest.raises(MissingKindError):
        parse_kinds("deg,entropy")
    with pytest.raises(MissingKindError):
        parse_kinds("")


def test_report_lookup() -> None:
    report = entropy_report(load_dataset("petersen"), ["deg"])
    assert report.value("deg") == pytest.approx(LN10)
    assert report.value("bet") is None
    assert report.distribution("partition") is None
    with pytest.raises(MissingKindError):
        report.value("closeness")


def test_betweenness_entropy_small_graphs() -> None:
    square = Graph.from_edges([("0", "1", 1), ("1", "2", 1), ("2", "3", 1), ("3", "0", 1)])
    assert betweenness_entropy(square) == pytest.approx(math.log(4))
    path = Graph.from_edges([("a", "b", 1), ("b", "c", 1)])
    assert betweenness_entropy(path) == 0.0

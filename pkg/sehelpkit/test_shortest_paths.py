import math

from hypothesis import given, settings
from hypothesis.strategies import data, integers

from .centrality import enumerate_shortest_paths
from .graph import Graph
from .shortest_paths import downstream_path_counts, same_length, sssp
from .utils.extra_hypothesis_strategies import connected_graphs, graphs, unit_weights


def test_bfs_on_path() -> None:
    g = Graph.from_edges([("a", "b", 1), ("b", "c", 1)])
    r = sssp(g, "a")
    assert r.dist == (0, 1, 2)
    assert r.sigma == (1, 1, 1)
    assert r.dag_succ == ((1,), (2,), ())
    assert r.order == (0, 1, 2)
    assert downstream_path_counts(r) == [2, 1, 0]
    assert downstream_path_counts(sssp(g, "b")) == [0, 2, 0]


def test_bfs_on_square_counts_both_ways_round() -> None:
    g = Graph.from_edges([("0", "1", 1), ("1", "2", 1), ("2", "3", 1), ("3", "0", 1)])
    r = sssp(g, "0")
    assert r.sigma == (1, 1, 2, 1)
    assert r.dag_succ[1] == (2,) and r.dag_succ[3] == (2,)


def test_unreachable_vertices() -> None:
    g = Graph.from_edges([("a", "b", 1)], nodes=["z"])
    r = sssp(g, "a")
    assert r.dist[g.resolve("z")] == math.inf
    assert not r.reachable(g.resolve("z"))
    assert r.order == (g.resolve("a"), g.resolve("b"))


def test_dijkstra_counts_tied_routes() -> None:
    g = Graph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 2)])
    r = sssp(g, "a")
    assert r.dist == (0.0, 1.0, 2.0)
    assert r.sigma == (1, 1, 2)
    assert r.dag_succ == ((1, 2), (2,), ())


def test_dijkstra_tie_tolerance() -> None:
    g = Graph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 2.0000000001)])
    assert sssp(g, "a").sigma[2] == 2
    g = Graph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 2.001)])
    assert sssp(g, "a").sigma[2] == 1


def test_same_length() -> None:
    assert same_length(1e6, 1e6 + 1e-4)
    assert not same_length(1.0, 1.0001)
    assert same_length(0.0, 0.0)


@given(data())
def test_bfs_and_dijkstra_agree_on_unit_weights(d) -> None:
    g = d.draw(graphs(min_nodes=1, weights=unit_weights))
    s = d.draw(integers(0, g.n - 1))
    assert sssp(g, s, weighted=False) == sssp(g, s, weighted=True)


@settings(max_examples=50)
@given(data())
def test_sigma_matches_enumerated_paths(d) -> None:
    g = d.draw(connected_graphs(max_nodes=8))
    s = d.draw(integers(0, g.n - 1))
    r = sssp(g, s)
    for t in range(g.n):
        if t != s:
            assert r.sigma[t] == len(enumerate_shortest_paths(g, s, t))


@given(data())
def test_scaling_keeps_the_dag(d) -> None:
    g = d.draw(connected_graphs())
    s = d.draw(integers(0, g.n - 1))
    r, scaled = sssp(g, s, weighted=True), sssp(g.scaled(7.3), s, weighted=True)
    assert scaled.sigma == r.sigma
    assert scaled.dag_succ == r.dag_succ

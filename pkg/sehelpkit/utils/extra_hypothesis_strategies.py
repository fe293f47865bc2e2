from hypothesis.strategies import *

from ..graph import Graph

__all__ = ["unit_weights", "small_weights", "labels", "graphs", "connected_graphs", "labelled_graphs"]


unit_weights = just(1.0)

# Small integer lengths make equal-length alternative paths, and so ties, common.
small_weights = sampled_from((1.0, 2.0, 3.0))


def _build(n, edges):
    return Graph.from_edges(
        ((str(u), str(v), w) for (u, v), w in sorted(edges.items())),
        nodes=[str(i) for i in range(n)],
    )


@composite
def graphs(draw, min_nodes=1, max_nodes=12, weights=unit_weights):
    """Arbitrary simple graphs on vertices "0".."n-1", possibly disconnected."""
    n = draw(integers(min_nodes, max_nodes))
    pairs = draw(
        lists(tuples(integers(0, n - 1), integers(0, n - 1)), max_size=3 * n)
    )
    edges = {}
    for u, v in pairs:
        if u != v:
            edges.setdefault((min(u, v), max(u, v)), draw(weights))
    return _build(n, edges)


@composite
def connected_graphs(draw, min_nodes=4, max_nodes=12, weights=small_weights):
    """Connected simple graphs: a random spanning tree plus random chords."""
    n = draw(integers(min_nodes, max_nodes))
    edges = {}
    for v in range(1, n):
        u = draw(integers(0, v - 1))
        edges[(u, v)] = draw(weights)
    chords = draw(
        lists(tuples(integers(0, n - 1), integers(0, n - 1)), max_size=2 * n)
    )
    for u, v in chords:
        if u != v:
            edges.setdefault((min(u, v), max(u, v)), draw(weights))
    return _build(n, edges)


# printable, non-blank labels; '#' and entity-like text included
labels = text(
    alphabet=characters(exclude_categories=("Cc", "Cf", "Cs", "Co", "Cn", "Zs", "Zl", "Zp")),
    min_size=1,
    max_size=6,
)


@composite
def labelled_graphs(draw, max_nodes=8, weights=small_weights):
    g = draw(graphs(max_nodes=max_nodes, weights=weights))
    names = draw(lists(labels, min_size=g.n, max_size=g.n, unique=True))
    rename = dict(zip(g.node_labels, names))
    return Graph.from_edges(
        ((rename[u], rename[v], w) for u, v, w in g.labelled_edges()),
        nodes=names,
    )

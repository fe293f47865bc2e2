import functools
import math
import time

import pytest

from .datasets import load_dataset
from .entropy import degree_entropy, entropy_report, partition_entropy
from .errors import GraphTooSmallError, MissingKindError, UnknownVertexError
from .graph import Graph, remove_vertex
from .robustness import LossTable, information_loss, rank_by_loss


@functools.lru_cache(maxsize=None)
def karate_losses() -> LossTable:
    return information_loss(load_dataset("karate"))


def test_karate_degree_rows() -> None:
    t = karate_losses()
    assert len(t) == 34
    assert [row.vertex for row in t] == [str(i) for i in range(1, 35)]
    row = t.row("1")
    assert row.degree == 16
    assert row.h_after["deg"] == pytest.approx(3.1970, abs=1e-4)
    assert row.i_loss["deg"] == pytest.approx(0.0639, abs=1e-4)
    assert t.row("12").h_after["deg"] == pytest.approx(3.2490, abs=1e-4)
    assert set(rank_by_loss(t, "deg")[:2]) == {"34", "33"}


def test_karate_betweenness_rows() -> None:
    t = karate_losses()
    assert t.baseline.h_bet == pytest.approx(2.326859, abs=1e-6)
    assert t.row("1").bet == pytest.approx(0.5418, abs=1e-4)
    assert t.row("1").h_after["bet"] == pytest.approx(2.3305, abs=1e-4)
    assert t.row("1").i_loss["bet"] == pytest.approx(-0.003671, abs=1e-5)
    row = t.row("34")
    assert row.h_after["bet"] == pytest.approx(2.1138, abs=1e-4)
    assert row.i_loss["bet"] == pytest.approx(0.2131, abs=1e-4)
    assert rank_by_loss(t, "bet")[:4] == ["34", "2", "3", "33"]


def test_degree_rows_are_recomputed_from_scratch() -> None:
    g = load_dataset("karate")
    for row in karate_losses():
        assert row.h_after["deg"] == degree_entropy(remove_vertex(g, row.vertex))


def test_bookkeeping() -> None:
    t = karate_losses()
    for kind in t.kinds:
        base = t.baseline.value(kind)
        assert math.fsum(base - row.i_loss[kind] for row in t) == pytest.approx(
            math.fsum(row.h_after[kind] for row in t)
        )


def test_petersen_rows_are_identical() -> None:
    t = information_loss(load_dataset("petersen"), ["deg", "partition"])
    for row in t:
        assert row.h_after["deg"] == pytest.approx(2.1808, abs=1e-4)
        assert row.i_loss["deg"] == pytest.approx(math.log(10) - 2.1808, abs=1e-4)
        assert row.h_after["partition"] == pytest.approx(0.6365, abs=1e-4)
        assert row.i_loss["partition"] == pytest.approx(-0.6365, abs=1e-4)


def test_undefined_cells() -> None:
    star = Graph.from_edges([("c", "1", 1), ("c", "2", 1), ("c", "3", 1)])
    t = information_loss(star)
    centre = t.row("c")
    assert centre.h_after["deg"] is None and centre.i_loss["deg"] is None
    assert centre.h_after["bet"] is None
    assert centre.h_after["partition"] == 0.0
    assert centre.bet == pytest.approx(0.5)
    assert rank_by_loss(t, "deg")[-1] == "c"
    leaf = t.row("1")
    assert leaf.h_after["bet"] == 0.0


def test_selected_vertices() -> None:
    g = load_dataset("karate")
    t = information_loss(g, ["deg"], vertices=["34", "1", "1"])
    assert [row.vertex for row in t] == ["1", "34"]
    full = karate_losses().row("34")
    row = t.row("34")
    assert (row.degree, row.bet) == (17, full.bet)
    assert row.h_after == {"deg": full.h_after["deg"]}
    assert row.i_loss == {"deg": full.i_loss["deg"]}
    with pytest.raises(UnknownVertexError):
        information_loss(g, ["deg"], vertices=["35"])
    with pytest.raises(UnknownVertexError):
        t.row("2")


def test_too_small() -> None:
    with pytest.raises(GraphTooSmallError):
        information_loss(Graph.from_edges([("a", "b", 1)]))


def test_rank_options() -> None:
    t = karate_losses()
    signed = rank_by_loss(t, "bet")
    by_magnitude = rank_by_loss(t, "bet", by_magnitude=True)
    assert sorted(signed) == sorted(by_magnitude)
    losses = [abs(t.row(v).i_loss["bet"]) for v in by_magnitude]
    assert losses == sorted(losses, reverse=True)
    with pytest.raises(MissingKindError):
        rank_by_loss(information_loss(load_dataset("petersen"), ["deg"]), "bet")


def test_parallel_matches_serial() -> None:
    g = load_dataset("karate")
    assert information_loss(g, workers=2) == karate_losses()


def test_karate_runtime() -> None:
    g = load_dataset("karate")
    started = time.perf_counter()
    entropy_report(g)
    assert time.perf_counter() - started < 1.0
    started = time.perf_counter()
    information_loss(g)
    assert time.perf_counter() - started < 5.0

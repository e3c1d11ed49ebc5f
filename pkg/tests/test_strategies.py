import random

import pytest
from hypothesis import given

from conftest import graphs
from indramsey.arrow import verify_coloring
from indramsey.expr import parse_graph as P
from indramsey.generate import generate
from indramsey.graphs import Graph, complete, copies, cycle, path
from indramsey.strategies import (
    Bipartition,
    StrategyError,
    avoid_2k2_coloring,
    chromatic_partition_coloring,
    gorgol_lower_bound,
    induced_matchings,
    matching_partition,
    matching_partition_excess,
    triangle_coloring,
)


def test_gorgol_values():
    assert gorgol_lower_bound(2, 3) == 6
    assert gorgol_lower_bound(1, 5) == 5
    assert gorgol_lower_bound(3, 2) == 4
    with pytest.raises(ValueError):
        gorgol_lower_bound(0, 2)


def test_avoid_2k2_examples():
    col = avoid_2k2_coloring(cycle(5), path(4))
    assert col is not None and verify_coloring(cycle(5), col, path(4), P("2K2")) is None
    assert avoid_2k2_coloring(P("K5"), path(4)) is None
    with pytest.raises(ValueError):
        avoid_2k2_coloring(cycle(6), path(4))
    with pytest.raises(ValueError):
        avoid_2k2_coloring(cycle(4), P("K2+K1"))


@pytest.mark.parametrize("g", ["P4", "K3", "C4", "K4", "P3", "S3"])
def test_avoid_2k2_on_every_host(g):
    g = P(g)
    h = P("2K2")
    for host in generate(g.order + 1):
        col = avoid_2k2_coloring(host, g)
        if col is not None:
            assert verify_coloring(host, col, g, h) is None


def test_chromatic_partition():
    col = chromatic_partition_coloring(cycle(5), path(3), 3)
    assert col is not None and verify_coloring(cycle(5), col, path(3), complete(3)) is None
    # every 2-partition of K5 puts a P3... K5 has no induced P3 at all
    assert chromatic_partition_coloring(complete(5), path(3), 3) is not None
    assert chromatic_partition_coloring(P("2K3"), complete(2), 2) is None


def test_induced_matchings():
    assert len(induced_matchings(path(4))) == 3  # 01 and 23 are joined by 12
    assert len(induced_matchings(P("2K2"))) == 3
    assert all(len(m) == 1 for m in induced_matchings(complete(4)))


@given(graphs(max_order=8))
def test_matching_partition_certified(g):
    part = matching_partition(g)
    assert 3 * matching_partition_excess(g, part) <= g.order
    assert part.first | part.second == frozenset(range(g.order))
    assert not part.first & part.second


@given(graphs(min_order=6, max_order=9))
def test_improvement_steps_agree_with_certificate(g):
    try:
        part = matching_partition(g, exhaustive_max=0)
    except StrategyError:
        return  # giving up is allowed; a wrong answer is not
    assert 3 * matching_partition_excess(g, part) <= g.order


def test_excess_counts_inside_edges():
    part = Bipartition(frozenset({0, 1}), frozenset({2, 3}))
    assert matching_partition_excess(P("2K2"), part) == 2
    assert matching_partition_excess(path(4), part) == 1


def _planted(rng, n, t):
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4}
    edges = {e for e in edges if not (e[0] < 3 * t and e[1] < 3 * t)}
    for i in range(t):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        edges |= {(a, b), (a, c), (b, c)}
    return Graph(n, sorted(edges))


def test_triangle_coloring_on_small_hosts():
    rng = random.Random(5)
    for n in range(6, 12):
        for _ in range(15):
            host = _planted(rng, n, 2)
            col = triangle_coloring(host, 2)
            assert col is not None
            assert verify_coloring(host, col, complete(3), copies(2, complete(3))) is None


def test_triangle_coloring_without_pattern():
    assert triangle_coloring(cycle(6), 1) is None
    col = triangle_coloring(complete(5), 1)
    assert verify_coloring(complete(5), col, complete(3), complete(3)) is None

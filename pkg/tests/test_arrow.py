import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from indramsey.arrow import (
    ColoringError,
    Colour,
    EdgeColoring,
    Outcome,
    brute_force_arrowing,
    decide_arrowing,
    decide_weak_arrowing,
    edge_order,
    verify_coloring,
)
from indramsey.expr import parse_graph as P
from indramsey.generate import generate
from indramsey.graphs import add_isolated, complete, copies, cycle, path
from oracles import brute_arrows

PAIRS = [("K2", "K2"), ("P3", "K2"), ("K3", "K3"), ("P3", "2K2"), ("P4", "P3")]


def test_known_verdicts():
    assert decide_arrowing(cycle(7), path(4), P("2K2")).arrows
    assert decide_arrowing(P("2P3"), path(3), P("2K2")).arrows
    v = decide_arrowing(path(6), path(5), P("2K2"))
    assert v.outcome is Outcome.NOT_ARROWS and verify_coloring(path(6), v.witness, path(5), P("2K2")) is None
    assert decide_weak_arrowing(complete(6), complete(3), complete(3)).arrows
    assert decide_weak_arrowing(complete(5), complete(3), complete(3)).outcome is Outcome.NOT_ARROWS


def test_verify_coloring_examples():
    c7 = cycle(7)
    red = EdgeColoring.uniform(c7, Colour.RED)
    bad = verify_coloring(c7, red, path(4), P("2K2"))
    assert bad is not None and bad.colour is Colour.RED
    blue = EdgeColoring.from_sets(c7, [(0, 1), (3, 4)])
    bad = verify_coloring(c7, blue, P("K4"), P("2K2"))
    assert bad is not None and bad.colour is Colour.BLUE
    # two adjacent blue edges leave an all-red P5 on the remaining vertices
    adj_blue = EdgeColoring.from_sets(c7, [(0, 1), (1, 2)])
    assert verify_coloring(c7, adj_blue, path(4), P("2K2")).colour is Colour.RED


def test_all_blue_good_when_no_blue_pattern():
    assert verify_coloring(path(3), EdgeColoring.uniform(path(3), Colour.BLUE), path(3), complete(3)) is None


def test_budget_exhaustion_is_unknown():
    v = decide_arrowing(P("2K6"), complete(3), P("2K3"), budget=5)
    assert v.outcome is Outcome.UNKNOWN and v.stats.nodes <= 5


def test_edgeless_pattern_copy_forces_arrowing():
    # a red copy of an edgeless pattern needs no red edges
    assert decide_arrowing(path(3), P("g6:A?"), complete(3)).arrows


@pytest.mark.parametrize("red,blue", PAIRS)
def test_engine_matches_brute_force_up_to_order_5(red, blue):
    g, h = P(red), P(blue)
    for n in range(1, 6):
        for host in generate(n):
            a = decide_arrowing(host, g, h).outcome
            b = brute_force_arrowing(host, g, h).outcome
            assert a == b, (host.edges(), red, blue)


@given(graphs(max_order=5))
def test_engine_matches_independent_oracle(host):
    for red, blue in PAIRS[:4]:
        g, h = P(red), P(blue)
        assert decide_arrowing(host, g, h).arrows == brute_arrows(host, g, h)


@given(graphs(max_order=6))
def test_colour_symmetry(host):
    for red, blue in [("P3", "2K2"), ("P3", "K3"), ("K2", "P4")]:
        g, h = P(red), P(blue)
        v = decide_arrowing(host, g, h)
        w = decide_arrowing(host, h, g)
        assert v.arrows == w.arrows
        if v.witness is not None:
            assert verify_coloring(host, v.witness.swapped(), h, g) is None


@given(graphs(min_order=1, max_order=6))
def test_isolated_vertex_never_helps_connected_patterns(host):
    g = path(3)
    # an induced subgraph that arrows makes the larger host arrow
    if decide_arrowing(host, g, P("2K2")).arrows:
        assert decide_arrowing(add_isolated(host), g, P("2K2")).arrows
    # with both patterns connected the isolated vertex is irrelevant
    assert decide_arrowing(add_isolated(host), g, complete(3)).arrows == decide_arrowing(host, g, complete(3)).arrows


@given(st.sampled_from([("P3", "K2", "P3"), ("K3", "K2", "K3"), ("P4", "K2", "P4"), ("K2", "K2", "K2"), ("P3", "P3", "g6:CF")]),
       st.integers(1, 2), st.integers(1, 2))
def test_disjoint_copies_of_a_host_arrow_the_multiplied_pair(case, s, t):
    red, blue, host = map(P, case)
    assert decide_arrowing(host, red, blue).arrows
    assert decide_arrowing(copies(s + t - 1, host), copies(s, red), copies(t, blue)).arrows


@given(graphs(max_order=6))
def test_witness_text_round_trip(host):
    v = decide_arrowing(host, path(3), complete(3))
    if v.witness is not None:
        again = EdgeColoring.from_text(v.witness.to_text())
        assert again == v.witness


def test_witness_format_errors():
    with pytest.raises(ColoringError):
        EdgeColoring.from_mapping(path(3), {(0, 1): 0})
    with pytest.raises(ColoringError):
        EdgeColoring.from_mapping(path(3), {(0, 1): 0, (1, 2): 1, (0, 2): 1})
    with pytest.raises(ColoringError):
        EdgeColoring.from_text("e 0 1 red\n")
    with pytest.raises(ColoringError):
        EdgeColoring.from_text("c Bg\ne 0 1 green\ne 1 2 red\n")
    text = EdgeColoring.from_sets(path(3), [(1, 2)]).to_text()
    assert text == "c Bg\ne 0 1 red\ne 1 2 blue\n"


def test_edge_order_prefers_busy_edges():
    order, first = edge_order(3, [0b011], [0b110, 0b100])
    assert order[0] in (1, 2) and set(order) == {0, 1, 2}
    assert first[2] == Colour.RED and first[0] == Colour.BLUE

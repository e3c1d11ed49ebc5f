import pytest
from hypothesis import given

from conftest import graphs
from indramsey.graphs import (
    Graph,
    add_isolated,
    build_family,
    clique_number,
    complete,
    complete_multipartite,
    components,
    copies,
    cycle,
    disjoint_union,
    empty,
    has_isolated_vertex,
    independence_number,
    is_connected,
    parameters,
    path,
    star,
)
from oracles import brute_induced_sets


def test_families_sizes():
    assert (path(5).order, path(5).num_edges) == (5, 4)
    assert (cycle(7).order, cycle(7).num_edges) == (7, 7)
    assert complete(5).num_edges == 10
    assert (star(3).order, star(3).num_edges, star(3).degree(0)) == (4, 3, 3)
    assert complete_multipartite(3, 3, 2).num_edges == 9 + 6 + 6
    assert empty(4).num_edges == 0
    assert build_family("multipartite", 2, 2).num_edges == 4


def test_build_family_matches_constructors():
    assert build_family("path", 4) == path(4)
    assert build_family("cycle", 5) == cycle(5)
    assert build_family("complete", 3) == complete(3)
    assert build_family("star", 2) == path(3).relabel([1, 0, 2])
    with pytest.raises(ValueError):
        build_family("wheel", 5)


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        cycle(2)


def test_union_and_copies():
    g = disjoint_union(complete(3), path(2))
    assert g.order == 5 and g.num_edges == 4
    assert components(g) == [[0, 1, 2], [3, 4]]
    assert copies(3, path(3)).num_edges == 6
    assert has_isolated_vertex(add_isolated(complete(2)))
    assert not is_connected(copies(2, complete(2)))
    assert is_connected(cycle(6))


def test_known_parameters():
    assert independence_number(cycle(5)) == 2
    assert clique_number(cycle(5)) == 2
    assert independence_number(path(5)) == 3
    assert clique_number(complete_multipartite(2, 2, 2)) == 3
    p = parameters(complete(4))
    assert (p.independence_number, p.clique_number, p.is_connected) == (1, 4, True)


@given(graphs(max_order=7))
def test_alpha_omega_match_brute_force(g):
    alpha = max((k for k in range(1, g.order + 1) if brute_induced_sets(g, empty(k))), default=0)
    omega = max((k for k in range(1, g.order + 1) if brute_induced_sets(g, complete(k))), default=0)
    assert independence_number(g) == alpha
    assert clique_number(g) == omega


@given(graphs(max_order=8))
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.num_edges + g.complement().num_edges == g.order * (g.order - 1) // 2


@given(graphs(max_order=8))
def test_relabel_preserves_degrees(g):
    perm = list(reversed(range(g.order)))
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])


@given(graphs(max_order=8))
def test_components_partition_vertices(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.order))
    assert is_connected(g) == (len(comps) <= 1)

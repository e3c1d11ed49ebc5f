from itertools import product

from hypothesis import given

from conftest import graphs
from indramsey.embed import (
    enumerate_induced,
    find_induced,
    find_mono_induced,
    find_mono_subgraph,
    induced_copy_masks,
    is_induced_embedding,
)
from indramsey.graphs import complete, copies, cycle, path
from oracles import brute_induced_sets, brute_mono_induced

PATTERNS = [complete(2), path(3), copies(2, complete(2)), complete(3), path(4), cycle(4)]


def test_examples():
    assert find_induced(cycle(7), path(5)) is not None
    assert find_induced(complete(8), copies(2, complete(3))) is None
    assert find_induced(path(4), complete(3)) is None
    assert len(list(enumerate_induced(cycle(6), copies(2, complete(2)), distinct_sets=True))) == 3


@given(graphs(max_order=7))
def test_copy_sets_match_brute_force(host):
    for pat in PATTERNS:
        want = brute_induced_sets(host, pat)
        got = {frozenset(e.values()) for e in enumerate_induced(host, pat, distinct_sets=True)}
        assert got == want
        assert (find_induced(host, pat) is not None) == bool(want)
        assert len(induced_copy_masks(host, pat)) == len(want)
        for emb in enumerate_induced(host, pat):
            assert is_induced_embedding(host, pat, emb)


def test_mono_search_matches_brute_force_on_small_hosts():
    for host in (cycle(5), path(5), complete(4), copies(2, path(3))):
        for colours in product((0, 1), repeat=host.num_edges):
            for pat in (path(3), copies(2, complete(2)), complete(3)):
                for col in (0, 1):
                    assert (find_mono_induced(host, colours, col, pat) is not None) == \
                        brute_mono_induced(host, colours, col, pat, True)
                    assert (find_mono_subgraph(host, colours, col, pat) is not None) == \
                        brute_mono_induced(host, colours, col, pat, False)

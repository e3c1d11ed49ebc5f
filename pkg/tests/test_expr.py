import pytest
from hypothesis import given
from hypothesis import strategies as st

from indramsey.canon import canonical_key
from indramsey.expr import ExprError, parse_expr, parse_graph
from indramsey.graph6 import encode
from indramsey.graphs import complete, complete_multipartite, copies, cycle, disjoint_union, path, star


def test_families():
    assert parse_graph("P4") == path(4)
    assert parse_graph("C7") == cycle(7)
    assert parse_graph("K3") == complete(3)
    assert parse_graph("S3") == star(3)
    assert parse_graph("K3,3,2") == complete_multipartite(3, 3, 2)
    assert parse_graph("2K2") == copies(2, complete(2))
    assert parse_graph("K3+2K2") == disjoint_union(complete(3), complete(2), complete(2))


def test_graph6_literals():
    assert parse_graph("g6:Bw") == complete(3)
    assert parse_graph("Bw") == complete(3)
    assert str(parse_expr("g6:Bw")) == "g6:Bw"


@pytest.mark.parametrize("bad", ["", "X5", "0K3", "C2", "P2,3", "g6:~~"])
def test_errors(bad):
    with pytest.raises(ExprError):
        parse_graph(bad)


terms = st.tuples(st.integers(1, 3), st.sampled_from("PCKS"), st.integers(1, 5)).filter(
    lambda t: not (t[1] == "C" and t[2] < 3))


@given(st.lists(terms, min_size=1, max_size=3))
def test_print_parse_round_trip(ts):
    text = "+".join(f"{m if m > 1 else ''}{f}{n}" for m, f, n in ts)
    expr = parse_expr(text)
    again = parse_expr(str(expr))
    assert again == expr
    assert canonical_key(again.graph()) == canonical_key(expr.graph())
    assert parse_graph("g6:" + encode(expr.graph())) == expr.graph()

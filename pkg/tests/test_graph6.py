import io

import pytest
from hypothesis import given

from conftest import graphs
from indramsey.graph6 import Graph6Error, decode, encode, read_lines, write_lines
from indramsey.graphs import Graph, complete, cycle, empty, path


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def test_known_encodings():
    # standard strings produced by common graph tools
    assert encode(complete(2)) == "A_"
    assert encode(empty(2)) == "A?"
    assert encode(complete(3)) == "Bw"
    assert encode(complete(4)) == "C~"
    assert encode(Graph(0)) == "?"
    assert encode(petersen()) == "IheA@GUAo"


def test_bit_order_is_column_wise():
    # bits x(0,1), x(0,2), x(1,2) padded to six: edge 1-2 alone is 001000
    assert encode(Graph(3, [(1, 2)])) == "B" + chr(63 + 8)
    assert encode(Graph(3, [(0, 2)])) == "B" + chr(63 + 16)


def test_decode_header_and_bytes():
    assert decode(">>graph6<<Bw") == complete(3)
    assert decode(b"Bw") == complete(3)


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x20", "~??", "A\x7f"])
def test_malformed_rejected(bad):
    with pytest.raises(Graph6Error):
        decode(bad)


@given(graphs(max_order=12))
def test_round_trip(g):
    assert decode(encode(g)) == g


def test_stream_helpers():
    buf = io.StringIO()
    assert write_lines([path(4), cycle(5)], buf) == 2
    buf.seek(0)
    assert list(read_lines(buf)) == [path(4), cycle(5)]

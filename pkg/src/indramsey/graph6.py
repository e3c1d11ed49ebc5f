"""graph6 encoding for graphs of order at most 62."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graphs import MAX_ORDER, Graph


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> str:
    n = g.order
    if n > MAX_ORDER:
        raise Graph6Error("orders above 62 need the long size form, which is unsupported")
    bits = []
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            bits.append(row >> u & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = x << 1 | b
        out.append(chr(63 + x))
    return "".join(out)


def encode_bytes(g: Graph) -> bytes:
    return encode(g).encode("ascii")


def decode(data: str | bytes) -> Graph:
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("graph6 data must be ASCII") from exc
    s = data.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    for c, x in zip(s, vals):
        if not 0 <= x <= 63:
            raise Graph6Error(f"byte {c!r} outside the graph6 range 63..126")
    n = vals[0]
    if n == 63:
        raise Graph6Error("orders above 62 are unsupported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated: order {n} needs {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: order {n} needs {need} data bytes, got {len(body)}")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph.from_adjacency(adj)


def read_lines(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + "\n")
        count += 1
    return count

"""Simple undirected graphs on dense vertex labels ``0..n-1``.

Adjacency is stored as one Python int bitmask per vertex, which keeps
neighbourhood intersections and induced-subgraph tests cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Immutable simple graph.  Equality is label-for-label, not isomorphism."""

    __slots__ = ("order", "adj", "_edges", "_hash")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0 or order > MAX_ORDER:
            raise ValueError(f"order must be in 0..{MAX_ORDER}, got {order}")
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.order = order
        self.adj: tuple[int, ...] = tuple(adj)
        self._edges: tuple[tuple[int, int], ...] | None = None
        self._hash: int | None = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        n = len(adj)
        if n > MAX_ORDER:
            raise ValueError(f"order must be at most {MAX_ORDER}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row >> u & 1 or row & ~full:
                raise ValueError("adjacency has a loop or an out-of-range bit")
            for v in _bits(row):
                if not adj[v] >> u & 1:
                    raise ValueError("adjacency is not symmetric")
        g.order = n
        g.adj = tuple(adj)
        g._edges = None
        g._hash = None
        return g

    # -- basic queries -----------------------------------------------------

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order.

        The position of an edge in this tuple is its *edge index*; edge
        colorings and copy masks are indexed this way.
        """
        if self._edges is None:
            out = []
            for u in range(self.order):
                for v in _bits(self.adj[u] >> (u + 1)):
                    out.append((u, u + 1 + v))
            self._edges = tuple(out)
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph.from_adjacency([(full ^ a) & ~(1 << v) for v, a in enumerate(self.adj)])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise ValueError("repeated vertex")
        adj = []
        for v in vertices:
            row = 0
            for w in _bits(self.adj[v]):
                i = pos.get(w)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph.from_adjacency(adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        n = self.order
        adj = [0] * n
        for v in range(n):
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph.from_adjacency(adj)

    def edge_mask_within(self, vmask: int) -> int:
        """Bitmask over edge indices of the edges with both ends in ``vmask``."""
        out = 0
        for i, (u, v) in enumerate(self.edges()):
            if vmask >> u & 1 and vmask >> v & 1:
                out |= 1 << i
        return out

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges())}

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.adj))
        return self._hash

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Graph({self.order}, {list(self.edges())})"


# -- families ---------------------------------------------------------------


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("Empty(n) needs n >= 1")
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("Path(n) needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("Cycle(n) needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("Complete(n) needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """Star with ``n`` edges (``n + 1`` vertices, centre 0)."""
    if n < 1:
        raise ValueError("Star(n) needs n >= 1")
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    return Graph(n, ((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "empty": empty,
    "multipartite": complete_multipartite,
}


def build_family(kind: str, *params: int) -> Graph:
    """Construct a standard graph: ``build_family("cycle", 7)``."""
    try:
        ctor = _FAMILIES[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}") from None
    if kind.lower() != "multipartite" and len(params) != 1:
        raise ValueError(f"{kind} takes exactly one parameter")
    return ctor(*params)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    for g in graphs:
        shift = len(adj)
        adj.extend(a << shift for a in g.adj)
    return Graph.from_adjacency(adj)


def copies(t: int, g: Graph) -> Graph:
    if t < 1:
        raise ValueError("need at least one copy")
    return disjoint_union(*([g] * t))


def add_isolated(g: Graph, k: int = 1) -> Graph:
    return Graph.from_adjacency(list(g.adj) + [0] * k)


# -- parameters -------------------------------------------------------------


def _max_independent(adj: Sequence[int], cand: int) -> int:
    """Size of a largest independent set inside ``cand`` (branch and bound)."""
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + popcount(cand) <= best:
            return
        # branch on a vertex of maximum degree inside cand
        v = max(_bits(cand), key=lambda x: popcount(adj[x] & cand))
        if popcount(adj[v] & cand) == 0:
            # cand is independent
            size += popcount(cand)
            if size > best:
                best = size
            return
        grow(size + 1, cand & ~adj[v] & ~(1 << v))
        grow(size, cand & ~(1 << v))

    grow(0, cand)
    return best


def independence_number(g: Graph) -> int:
    return _max_independent(g.adj, (1 << g.order) - 1)


def clique_number(g: Graph) -> int:
    return independence_number(g.complement())


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def has_isolated_vertex(g: Graph) -> bool:
    return any(a == 0 for a in g.adj)


@dataclass(frozen=True)
class Parameters:
    independence_number: int
    clique_number: int
    is_connected: bool
    components: tuple[tuple[int, ...], ...]


def parameters(g: Graph) -> Parameters:
    return Parameters(
        independence_number=independence_number(g),
        clique_number=clique_number(g),
        is_connected=is_connected(g),
        components=tuple(tuple(c) for c in components(g)),
    )

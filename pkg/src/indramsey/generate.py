"""Isomorph-free generation of all graphs of a given order.

Canonical augmentation by vertex: every graph of order n is produced from
the graph obtained by deleting its canonical deletion vertex, and a child
is kept only when the vertex just added lies in that vertex's orbit.
Duplicates that arise from symmetric neighbourhood choices in the same
parent are removed with a per-parent key set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canon import canonical_key, canonical_labeling, orbits, same_orbit
from .graphs import Graph, is_connected, popcount

MAX_GENERATE_ORDER = 10


@dataclass(frozen=True)
class GenFilter:
    connected_only: bool = False
    min_edges: int | None = None
    max_edges: int | None = None
    must_contain_induced: tuple[Graph, ...] = field(default_factory=tuple)

    def accepts(self, g: Graph) -> bool:
        m = g.num_edges
        if self.min_edges is not None and m < self.min_edges:
            return False
        if self.max_edges is not None and m > self.max_edges:
            return False
        if self.connected_only and not is_connected(g):
            return False
        if self.must_contain_induced:
            from .embed import find_induced

            if any(find_induced(g, p) is None for p in self.must_contain_induced):
                return False
        return True


NO_FILTER = GenFilter()


def _invariant(adj: Sequence[int], v: int) -> tuple:
    row = adj[v]
    return popcount(row), sorted(popcount(adj[w]) for w in _iter(row))


def _iter(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_canonical_child(child: Graph, v: int) -> bool:
    """Is ``v`` in the orbit of the canonical deletion vertex of ``child``?"""
    adj = child.adj
    invs = [_invariant(adj, x) for x in range(child.order)]
    top = max(invs)
    if invs[v] != top:
        return False
    cands = [x for x in range(child.order) if invs[x] == top]
    if len(cands) == 1:
        return True
    lab, gens = canonical_labeling(child)
    cset = set(cands)
    w = next(x for x in reversed(lab) if x in cset)
    if w == v:
        return True
    reps = orbits(child.order, gens)
    if reps[v] == reps[w]:
        return True
    return same_orbit(child, v, w)


def _children(parent: Graph) -> Iterator[tuple[bytes, Graph]]:
    n = parent.order
    seen: set[bytes] = set()
    base = list(parent.adj)
    for nbrs in range(1 << n):
        adj = [row | ((nbrs >> u & 1) << n) for u, row in enumerate(base)]
        adj.append(nbrs)
        child = Graph.from_adjacency(adj)
        if not _is_canonical_child(child, n):
            continue
        key = canonical_key(child)
        if key in seen:
            continue
        seen.add(key)
        yield key, child


def _generate_all(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1)
        return
    for parent in _generate_all(n - 1):
        for _, child in _children(parent):
            yield child


def generate(n: int, filt: GenFilter = NO_FILTER, *, max_order: int = MAX_GENERATE_ORDER) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of order ``n`` passing ``filt``.

    The stream is lazy and deterministic; stop consuming it to abort.
    """
    if not 1 <= n <= max_order:
        raise ValueError(f"order must be in 1..{max_order}, got {n}")
    for g in _generate_all(n):
        if filt.accepts(g):
            yield g


def count(n: int, filt: GenFilter = NO_FILTER, *, max_order: int = MAX_GENERATE_ORDER) -> int:
    return sum(1 for _ in generate(n, filt, max_order=max_order))

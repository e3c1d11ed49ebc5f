"""Canonical labeling by partition refinement plus individualization.

The canonical form of a graph is the relabeling whose upper-triangle
adjacency string is lexicographically least among the leaves of the
refinement search tree.  Automorphisms discovered at equal leaves prune
sibling branches lying in the same orbit.
"""
from __future__ import annotations

from typing import Sequence

from .graphs import Graph, _bits, popcount

Partition = list[list[int]]


def refine(adj: Sequence[int], cells: Partition) -> Partition:
    """Coarsest equitable refinement of an ordered partition.

    Fragments of a split cell are ordered by their neighbour count into the
    splitting cell, so the result depends only on the isomorphism type of
    the (graph, partition) pair.
    """
    cells = [list(c) for c in cells]
    masks = [_mask(c) for c in cells]
    queue = list(range(len(cells)))
    queued = set(queue)
    while queue and len(cells) < len(adj):
        w = queue.pop(0)
        queued.discard(w)
        wmask = masks[w]
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = {}
            for v in cell:
                counts.setdefault(popcount(adj[v] & wmask), []).append(v)
            if len(counts) == 1:
                i += 1
                continue
            frags = [counts[k] for k in sorted(counts)]
            cells[i : i + 1] = frags
            masks[i : i + 1] = [_mask(f) for f in frags]
            k = len(frags) - 1
            # shift queued indices past the split point
            queue = [q + k if q > i else q for q in queue]
            queued = set(queue)
            if w > i:
                w += k
                wmask = masks[w]
            for j in range(i, i + len(frags)):
                if j not in queued:
                    queue.append(j)
                    queued.add(j)
            i += len(frags)
    return cells


def _mask(vs: Sequence[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _code(adj: Sequence[int], lab: Sequence[int]) -> int:
    n = len(lab)
    code = 0
    for j in range(1, n):
        row = adj[lab[j]]
        for i in range(j):
            code = code << 1 | (row >> lab[i] & 1)
    return code


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.best_code: int | None = None
        self.best_lab: list[int] | None = None
        self.generators: list[list[int]] = []

    def run(self, cells: Partition) -> None:
        self._node(refine(self.adj, cells), [])

    def _node(self, cells: Partition, prefix: list[int]) -> None:
        target = None
        for c in cells:
            if len(c) > 1:
                target = c
                break
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        ti = cells.index(target)
        explored: list[int] = []
        for v in target:
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            rest = [x for x in target if x != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            self._node(refine(self.adj, child), prefix + [v])

    def _leaf(self, lab: list[int]) -> None:
        code = _code(self.adj, lab)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_lab = lab
        elif code == self.best_code:
            assert self.best_lab is not None
            gamma = [0] * self.n
            for a, b in zip(self.best_lab, lab):
                gamma[a] = b
            if any(gamma[i] != i for i in range(self.n)):
                self.generators.append(gamma)

    def _same_orbit(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.generators if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(e in orbit for e in explored)


def canonical_labeling(g: Graph, cells: Partition | None = None) -> tuple[list[int], list[list[int]]]:
    """Return ``(lab, generators)``.

    ``lab[i]`` is the vertex placed at canonical position ``i``.  The
    generators are automorphisms (respecting ``cells``) found on the way;
    they need not generate the whole group.
    """
    n = g.order
    if n == 0:
        return [], []
    if cells is None:
        cells = [list(range(n))]
    s = _Search(g.adj)
    s.run(cells)
    assert s.best_lab is not None
    return s.best_lab, s.generators


def canonical_key(g: Graph, cells: Partition | None = None) -> bytes:
    """Bytes equal for two graphs exactly when they are isomorphic.

    With ``cells`` the key is for the vertex-coloured graph; cell order
    matters, cell contents are matched as colour classes.
    """
    n = g.order
    if n == 0:
        return b"\x00"
    lab, _ = canonical_labeling(g, cells)
    code = _code(g.adj, lab)
    nbits = n * (n - 1) // 2
    body = code.to_bytes((nbits + 7) // 8, "big") if nbits else b""
    head = bytes([n])
    if cells is not None:
        head += bytes(len(c) for c in cells) + b"|"
    return head + body


def canonical_form(g: Graph) -> Graph:
    lab, _ = canonical_labeling(g)
    perm = [0] * g.order
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (least element) for each vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for x in range(n):
            a, b = find(x), find(gen[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def same_orbit(g: Graph, v: int, w: int) -> bool:
    """True when some automorphism of ``g`` maps ``v`` to ``w``."""
    if v == w:
        return True
    if popcount(g.adj[v]) != popcount(g.adj[w]):
        return False
    rest_v = [x for x in range(g.order) if x != v]
    rest_w = [x for x in range(g.order) if x != w]
    return canonical_key(g, [[v], rest_v]) == canonical_key(g, [[w], rest_w])


def vertex_mask(vs: Sequence[int]) -> int:
    return _mask(vs)


__all__ = [
    "refine",
    "canonical_labeling",
    "canonical_key",
    "canonical_form",
    "are_isomorphic",
    "orbits",
    "same_orbit",
    "vertex_mask",
]

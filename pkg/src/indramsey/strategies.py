"""Closed-form lower bounds and constructive good colourings.

Every colouring returned here has already been re-checked with
:func:`indramsey.arrow.verify_coloring`; the constructions are never
trusted on structure alone.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arrow import Colour, EdgeColoring, verify_coloring
from .embed import find_induced
from .graphs import Graph, _bits, complete, copies, has_isolated_vertex, popcount

EXHAUSTIVE_PARTITION_MAX = 16


class StrategyError(RuntimeError):
    """A construction produced a colouring that fails verification."""


def gorgol_lower_bound(alpha: int, omega: int) -> int:
    """Lower bound for IR(G, H) with G connected, alpha(G) = alpha, omega(H) = omega."""
    if alpha < 1 or omega < 1:
        raise ValueError("alpha and omega must be positive")
    return (alpha - 1) * omega * (omega - 1) // 2 + omega


def _checked(host: Graph, coloring: EdgeColoring, g: Graph, h: Graph, what: str) -> EdgeColoring:
    bad = verify_coloring(host, coloring, g, h)
    if bad is not None:
        raise StrategyError(f"{what}: {bad.colour} copy at {bad.embedding}")
    return coloring


def avoid_2k2_coloring(host: Graph, g: Graph) -> EdgeColoring | None:
    """Good colouring of an (|V(g)|+1)-vertex host for ``(g, 2K2)``.

    Returns ``None`` when ``host`` has no induced ``g`` (then all-red is good).
    Otherwise: take an induced copy G' and the vertex v outside it, pick u in
    G' adjacent to v (any vertex of G' if there is none), and colour blue the
    edges at v plus one edge of G' at u.
    """
    if host.order != g.order + 1:
        raise ValueError("host must have exactly one more vertex than g")
    if g.order == 0 or has_isolated_vertex(g):
        raise ValueError("g must be non-empty with no isolated vertices")
    emb = find_induced(host, g)
    if emb is None:
        return None
    image = sorted(emb.values())
    image_mask = sum(1 << x for x in image)
    v = next(x for x in range(host.order) if not image_mask >> x & 1)
    touching = [x for x in image if host.has_edge(v, x)]
    u = touching[0] if touching else image[0]
    w = next(_bits(host.adj[u] & image_mask))
    blue = [(v, x) for x in host.neighbours(v)] + [(u, w)]
    coloring = EdgeColoring.from_sets(host, blue)
    return _checked(host, coloring, g, copies(2, complete(2)), "avoid_2k2_coloring")


def chromatic_partition_coloring(host: Graph, g: Graph, k: int) -> EdgeColoring | None:
    """Red inside k-1 parts none of which induces ``g``, blue across parts.

    The blue graph is (k-1)-partite, so the result is good for ``(g, H)``
    for every H of chromatic number k.  ``None`` when no such partition exists.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    parts = k - 1
    n = host.order
    label = [-1] * n

    def part_ok(p: int) -> bool:
        members = [x for x in range(n) if label[x] == p]
        if len(members) < g.order:
            return True
        return find_induced(host.induced(members), g) is None

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        for p in range(min(used + 1, parts)):
            label[i] = p
            if part_ok(p) and rec(i + 1, max(used, p + 1)):
                return True
        label[i] = -1
        return False

    if not rec(0, 0):
        return None
    blue = [(u, v) for u, v in host.edges() if label[u] != label[v]]
    coloring = EdgeColoring.from_sets(host, blue)
    return _checked(host, coloring, g, complete(k), "chromatic_partition_coloring")


# -- induced matchings ----------------------------------------------------


def induced_matchings(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """All non-empty induced matchings of ``g``."""
    edges = g.edges()
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(start: int, chosen: list[tuple[int, int]], covered: int, blocked: int) -> None:
        for i in range(start, len(edges)):
            u, v = edges[i]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            chosen.append((u, v))
            out.append(tuple(chosen))
            pair = (1 << u) | (1 << v)
            rec(i + 1, chosen, covered | pair, blocked | pair | g.adj[u] | g.adj[v])
            chosen.pop()

    rec(0, [], 0, 0)
    return out


@dataclass(frozen=True)
class Bipartition:
    first: frozenset[int]
    second: frozenset[int]

    def side(self, v: int) -> int:
        return 0 if v in self.first else 1


def within_part_edges(part: Bipartition, matching) -> int:
    return sum(1 for u, v in matching if part.side(u) == part.side(v))


def matching_partition_excess(g: Graph, part: Bipartition, matchings=None) -> int:
    """Largest number of within-part edges over induced matchings of ``g``."""
    if matchings is None:
        matchings = induced_matchings(g)
    return max((within_part_edges(part, m) for m in matchings), default=0)


def _certified(n: int, excess: int) -> bool:
    # bound is the real number n/3
    return 3 * excess <= n


def matching_partition(g: Graph, *, exhaustive_max: int = EXHAUSTIVE_PARTITION_MAX) -> Bipartition:
    """Bipartition in which every induced matching has at most n/3 edges inside a part.

    Small graphs are searched exhaustively; larger ones start from the
    trivial partition and repeatedly split the offending matching across
    the parts, giving up after 10*n rounds.
    """
    n = g.order
    matchings = induced_matchings(g)
    # edges inside a part: both endpoints' bits agree
    edge_sets = [[(1 << u) | (1 << v) for u, v in m] for m in matchings]

    def excess_of(side_mask: int) -> tuple[int, int]:
        worst, worst_i = 0, -1
        for i, pairs in enumerate(edge_sets):
            inside = 0
            for pm in pairs:
                k = popcount(side_mask & pm)
                if k != 1:
                    inside += 1
            if inside > worst:
                worst, worst_i = inside, i
        return worst, worst_i

    def as_bipartition(side_mask: int) -> Bipartition:
        first = frozenset(v for v in range(n) if not side_mask >> v & 1)
        return Bipartition(first, frozenset(range(n)) - first)

    if n <= exhaustive_max:
        # vertex 0 fixed on the first side
        for side_mask in range(0, 1 << max(n - 1, 0)):
            side_mask <<= 1
            worst, _ = excess_of(side_mask)
            if _certified(n, worst):
                return as_bipartition(side_mask)
        raise StrategyError(f"no certified bipartition exists for this {n}-vertex graph")

    side_mask = 0
    for _ in range(10 * n):
        worst, i = excess_of(side_mask)
        if _certified(n, worst):
            return as_bipartition(side_mask)
        for u, v in matchings[i]:
            side_mask &= ~(1 << u)
            side_mask |= 1 << v
    raise StrategyError(f"improvement steps did not certify a bipartition within {10 * n} rounds")


def triangle_coloring(host: Graph, t: int) -> EdgeColoring | None:
    """Colouring with no red K3 and, on fewer than 6t vertices, no blue induced tK3.

    ``None`` when ``host`` has no induced tK3 (then all-blue is good).
    Triangles a_i b_i c_i of an induced tK3 get a_i b_i and b_i c_i red; with
    (X', X'') a certified bipartition of the rest X, the edges a_i-X',
    c_i-X'' and X'-X'' are red too.  Everything else is blue.
    """
    if t < 1:
        raise ValueError("t must be positive")
    tk3 = copies(t, complete(3))
    emb = find_induced(host, tk3)
    if emb is None:
        return None
    triangles = [sorted((emb[3 * i], emb[3 * i + 1], emb[3 * i + 2])) for i in range(t)]
    used = {v for tri in triangles for v in tri}
    rest = [v for v in range(host.order) if v not in used]
    split = matching_partition(host.induced(rest))
    x1 = {rest[i] for i in split.first}
    x2 = {rest[i] for i in split.second}
    red: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        if host.has_edge(u, v):
            red.add((min(u, v), max(u, v)))

    for a, b, c in triangles:
        add(a, b)
        add(b, c)
        for x in x1:
            add(a, x)
        for x in x2:
            add(c, x)
    for x in x1:
        for y in x2:
            add(x, y)
    coloring = EdgeColoring(host, tuple(int(e not in red) for e in host.edges()))
    bad = verify_coloring(host, coloring, complete(3), tk3)
    if bad is not None:
        if host.order <= 6 * t - 1:
            raise StrategyError(f"triangle_coloring: {bad.colour} copy at {bad.embedding}")
        return None
    return coloring


__all__ = [
    "Bipartition",
    "Colour",
    "StrategyError",
    "avoid_2k2_coloring",
    "chromatic_partition_coloring",
    "gorgol_lower_bound",
    "induced_matchings",
    "matching_partition",
    "matching_partition_excess",
    "triangle_coloring",
    "within_part_edges",
]

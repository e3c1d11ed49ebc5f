"""Induced (and plain) subgraph embeddings by bitmask backtracking.

Pattern vertices are placed component by component, each component in
BFS order from a root, so after the root every candidate set is cut down
to a neighbourhood intersection.  Isomorphic components are placed with
increasing root images when only vertex sets matter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .canon import canonical_form, canonical_key
from .graphs import Graph, _bits, components, popcount

Embedding = dict[int, int]


@dataclass(frozen=True)
class _Plan:
    """Pattern vertices in placement order, with the constraints each one sees."""

    order: tuple[int, ...]  # original pattern vertex placed at step i
    earlier_adj: tuple[tuple[int, ...], ...]  # steps j < i adjacent to step i
    earlier_non: tuple[tuple[int, ...], ...]  # steps j < i not adjacent to step i
    degree: tuple[int, ...]
    nondegree: tuple[int, ...]
    # step index of the previous identical component's root, or -1
    twin_root: tuple[int, ...]


_plan_cache: dict[tuple, _Plan] = {}


def _plan(pattern: Graph) -> _Plan:
    cached = _plan_cache.get(pattern.adj)
    if cached is not None:
        return cached
    comps = []
    for comp in components(pattern):
        sub = pattern.induced(comp)
        key = canonical_key(sub)
        # map canonical positions back to original vertices
        canon = canonical_form(sub)
        iso = _find_iso(canon, sub)
        comps.append((-len(comp), key, [comp[iso[i]] for i in range(len(comp))], canon))
    comps.sort(key=lambda c: (c[0], c[1]))
    order: list[int] = []
    twin_root: list[int] = []
    prev_key = None
    prev_root = -1
    for _, key, verts, canon in comps:
        bfs = _bfs_order(canon)
        root_step = len(order)
        for j, local in enumerate(bfs):
            order.append(verts[local])
            twin_root.append(prev_root if j == 0 and key == prev_key else -1)
        prev_key, prev_root = key, root_step
    pos = {v: i for i, v in enumerate(order)}
    earlier_adj = []
    earlier_non = []
    for i, v in enumerate(order):
        earlier_adj.append(tuple(j for j in range(i) if pattern.has_edge(v, order[j])))
        earlier_non.append(tuple(j for j in range(i) if not pattern.has_edge(v, order[j])))
    n = pattern.order
    plan = _Plan(
        order=tuple(order),
        earlier_adj=tuple(earlier_adj),
        earlier_non=tuple(earlier_non),
        degree=tuple(pattern.degree(v) for v in order),
        nondegree=tuple(n - 1 - pattern.degree(v) for v in order),
        twin_root=tuple(twin_root),
    )
    del pos
    if len(_plan_cache) > 4096:
        _plan_cache.clear()
    _plan_cache[pattern.adj] = plan
    return plan


def _bfs_order(g: Graph) -> list[int]:
    if g.order == 0:
        return []
    seen = [0]
    mask = 1
    i = 0
    while i < len(seen):
        for w in _bits(g.adj[seen[i]] & ~mask):
            mask |= 1 << w
            seen.append(w)
        i += 1
    return seen


def _find_iso(a: Graph, b: Graph) -> list[int]:
    """Some isomorphism ``a -> b`` as a list, for graphs known to be isomorphic."""
    for emb in _search(b.adj, b.adj, b.order, _plan_plain(a), induced=True, distinct_sets=False):
        return [emb[i] for i in range(a.order)]
    raise ValueError("graphs are not isomorphic")


def _plan_plain(pattern: Graph) -> _Plan:
    order = list(range(pattern.order))
    # greedy connected order without component reasoning
    placed = 0
    seq = []
    remaining = set(order)
    while remaining:
        frontier = [v for v in sorted(remaining) if pattern.adj[v] & placed]
        v = frontier[0] if frontier else min(remaining)
        seq.append(v)
        remaining.discard(v)
        placed |= 1 << v
    n = pattern.order
    return _Plan(
        order=tuple(seq),
        earlier_adj=tuple(tuple(j for j in range(i) if pattern.has_edge(v, seq[j])) for i, v in enumerate(seq)),
        earlier_non=tuple(tuple(j for j in range(i) if not pattern.has_edge(v, seq[j])) for i, v in enumerate(seq)),
        degree=tuple(pattern.degree(v) for v in seq),
        nondegree=tuple(n - 1 - pattern.degree(v) for v in seq),
        twin_root=tuple(-1 for _ in seq),
    )


def _search(
    edge_adj: Sequence[int],
    full_adj: Sequence[int],
    host_order: int,
    plan: _Plan,
    *,
    induced: bool,
    distinct_sets: bool,
) -> Iterator[Embedding]:
    """Yield embeddings.

    Pattern edges must land on ``edge_adj`` edges; with ``induced``, pattern
    non-edges must land on non-edges of ``full_adj``.
    """
    k = len(plan.order)
    if k > host_order:
        return
    if k == 0:
        yield {}
        return
    full = (1 << host_order) - 1
    host_deg = [popcount(a) for a in edge_adj]
    host_nondeg = [host_order - 1 - popcount(a) for a in full_adj]
    images = [0] * k
    twin_root = plan.twin_root if distinct_sets else (-1,) * k

    def candidates(i: int, used: int) -> int:
        cand = full & ~used
        for j in plan.earlier_adj[i]:
            cand &= edge_adj[images[j]]
        if induced:
            for j in plan.earlier_non[i]:
                cand &= ~full_adj[images[j]]
        tr = twin_root[i]
        if tr >= 0:
            cand &= ~((2 << images[tr]) - 1)
        return cand

    stack = [(0, 0, candidates(0, 0))]
    while stack:
        i, used, cand = stack.pop()
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if host_deg[x] < plan.degree[i]:
                continue
            if induced and host_nondeg[x] < plan.nondegree[i]:
                continue
            images[i] = x
            if i + 1 == k:
                yield {plan.order[s]: images[s] for s in range(k)}
                continue
            stack.append((i, used, cand))
            nused = used | low
            stack.append((i + 1, nused, candidates(i + 1, nused)))
            break


def find_induced(host: Graph, pattern: Graph) -> Embedding | None:
    for emb in _search(host.adj, host.adj, host.order, _plan(pattern), induced=True, distinct_sets=True):
        assert is_induced_embedding(host, pattern, emb)
        return emb
    return None


def _colour_adjacency(host: Graph, colours: Sequence[int], colour: int) -> list[int]:
    adj = [0] * host.order
    for (u, v), c in zip(host.edges(), colours):
        if c == colour:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def find_mono_induced(host: Graph, colours: Sequence[int], colour: int, pattern: Graph) -> Embedding | None:
    """Induced copy of ``pattern`` in ``host`` whose edges all carry ``colour``.

    ``colours`` is indexed like ``host.edges()``.
    """
    if len(colours) != host.num_edges:
        raise ValueError("coloring must assign a colour to every host edge")
    adj = _colour_adjacency(host, colours, colour)
    for emb in _search(adj, host.adj, host.order, _plan(pattern), induced=True, distinct_sets=True):
        return emb
    return None


def find_mono_subgraph(host: Graph, colours: Sequence[int], colour: int, pattern: Graph) -> Embedding | None:
    """Not-necessarily-induced copy of ``pattern`` in one colour class."""
    if len(colours) != host.num_edges:
        raise ValueError("coloring must assign a colour to every host edge")
    adj = _colour_adjacency(host, colours, colour)
    for emb in _search(adj, adj, host.order, _plan(pattern), induced=False, distinct_sets=True):
        return emb
    return None


def enumerate_induced(
    host: Graph,
    pattern: Graph,
    visitor: Callable[[Embedding], object] | None = None,
    *,
    distinct_sets: bool = False,
) -> Iterator[Embedding]:
    """All induced embeddings, or one per image vertex set with ``distinct_sets``."""
    plan = _plan(pattern)
    seen: set[int] = set()
    for emb in _search(host.adj, host.adj, host.order, plan, induced=True, distinct_sets=distinct_sets):
        if distinct_sets:
            m = 0
            for x in emb.values():
                m |= 1 << x
            if m in seen:
                continue
            seen.add(m)
        if visitor is not None:
            visitor(emb)
        yield emb


def induced_copy_masks(host: Graph, pattern: Graph) -> list[int]:
    """Edge-index bitmasks of host[S] for every vertex set S inducing ``pattern``."""
    out = []
    seen: set[int] = set()
    plan = _plan(pattern)
    index = host.edge_index()
    for emb in _search(host.adj, host.adj, host.order, plan, induced=True, distinct_sets=True):
        vm = 0
        for x in emb.values():
            vm |= 1 << x
        if vm in seen:
            continue
        seen.add(vm)
        em = 0
        for p, q in pattern.edges():
            a, b = emb[p], emb[q]
            em |= 1 << index[(a, b) if a < b else (b, a)]
        out.append(em)
    return out


def subgraph_copy_masks(host: Graph, pattern: Graph) -> list[int]:
    """Edge-index bitmasks of every (not necessarily induced) copy of ``pattern``."""
    out = []
    seen: set[int] = set()
    index = host.edge_index()
    plan = _plan(pattern)
    for emb in _search(host.adj, host.adj, host.order, plan, induced=False, distinct_sets=True):
        em = 0
        for p, q in pattern.edges():
            a, b = emb[p], emb[q]
            em |= 1 << index[(a, b) if a < b else (b, a)]
        if em in seen:
            continue
        seen.add(em)
        out.append(em)
    return out


def is_induced_embedding(host: Graph, pattern: Graph, emb: Embedding) -> bool:
    if len(emb) != pattern.order or len(set(emb.values())) != pattern.order:
        return False
    for u in range(pattern.order):
        for v in range(u + 1, pattern.order):
            if pattern.has_edge(u, v) != host.has_edge(emb[u], emb[v]):
                return False
    return True

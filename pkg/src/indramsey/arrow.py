"""Strong (induced) and weak arrowing decisions.

``F -> (G, H)`` holds when every red/blue colouring of the edges of F has a
red copy of G or a blue copy of H.  For strong arrowing the copies must be
induced subgraphs of F.  The engine enumerates all copies once, turns each
into a clause over edge indices and hands the clause system to the search
kernel.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import kernel
from .canon import canonical_key
from .embed import (
    Embedding,
    find_mono_induced,
    find_mono_subgraph,
    induced_copy_masks,
    subgraph_copy_masks,
)
from .graph6 import decode, encode
from .graphs import Graph, _bits

DEFAULT_BUDGET = 10_000_000
BRUTE_FORCE_MAX_EDGES = 24


class Colour(IntEnum):
    RED = 0
    BLUE = 1

    def __str__(self) -> str:
        return self.name.lower()


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Total red/blue assignment, indexed like ``host.edges()``."""

    host: Graph
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colours) != self.host.num_edges:
            raise ColoringError(
                f"coloring has {len(self.colours)} entries for {self.host.num_edges} edges"
            )
        if any(c not in (0, 1) for c in self.colours):
            raise ColoringError("colours must be 0 (red) or 1 (blue)")

    @classmethod
    def from_mapping(cls, host: Graph, mapping: Mapping[tuple[int, int], int]) -> "EdgeColoring":
        norm = {}
        for (u, v), c in mapping.items():
            norm[(min(u, v), max(u, v))] = int(c)
        extra = set(norm) - set(host.edges())
        if extra:
            raise ColoringError(f"coloured pairs {sorted(extra)} are not host edges")
        missing = [e for e in host.edges() if e not in norm]
        if missing:
            raise ColoringError(f"partial coloring: {len(missing)} edges uncoloured, e.g. {missing[0]}")
        return cls(host, tuple(norm[e] for e in host.edges()))

    @classmethod
    def uniform(cls, host: Graph, colour: int) -> "EdgeColoring":
        return cls(host, (int(colour),) * host.num_edges)

    @classmethod
    def from_sets(cls, host: Graph, blue: Iterable[tuple[int, int]]) -> "EdgeColoring":
        blue_set = {(min(u, v), max(u, v)) for u, v in blue}
        unknown = blue_set - set(host.edges())
        if unknown:
            raise ColoringError(f"pairs {sorted(unknown)} are not host edges")
        return cls(host, tuple(int(e in blue_set) for e in host.edges()))

    def colour_of(self, u: int, v: int) -> Colour:
        return Colour(self.colours[self.host.edge_index()[(min(u, v), max(u, v))]])

    def edges_of(self, colour: int) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.host.edges(), self.colours) if c == colour]

    def swapped(self) -> "EdgeColoring":
        return EdgeColoring(self.host, tuple(1 - c for c in self.colours))

    # -- witness file format ---------------------------------------------

    def to_text(self) -> str:
        lines = [f"c {encode(self.host)}"]
        for (u, v), c in zip(self.host.edges(), self.colours):
            lines.append(f"e {u} {v} {Colour(c)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EdgeColoring":
        host = None
        mapping: dict[tuple[int, int], int] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "c" and len(parts) == 2 and host is None:
                host = decode(parts[1])
            elif parts[0] == "e" and len(parts) == 4 and host is not None:
                try:
                    u, v = int(parts[1]), int(parts[2])
                    col = Colour[parts[3].upper()]
                except (ValueError, KeyError) as exc:
                    raise ColoringError(f"line {lineno}: bad edge line {raw!r}") from exc
                if (u, v) in mapping:
                    raise ColoringError(f"line {lineno}: edge ({u}, {v}) coloured twice")
                mapping[(u, v)] = int(col)
            else:
                raise ColoringError(f"line {lineno}: unexpected {raw!r}")
        if host is None:
            raise ColoringError("missing 'c <graph6>' header")
        if any(u >= v for u, v in mapping):
            raise ColoringError("edge lines must list u < v")
        return cls.from_mapping(host, mapping)


class Violation(NamedTuple):
    colour: Colour
    embedding: Embedding


def _colours_of(host: Graph, coloring: EdgeColoring | Mapping[tuple[int, int], int] | Sequence[int]) -> tuple[int, ...]:
    if isinstance(coloring, EdgeColoring):
        if coloring.host != host:
            raise ColoringError("coloring belongs to a different host")
        return coloring.colours
    if isinstance(coloring, Mapping):
        return EdgeColoring.from_mapping(host, coloring).colours
    return EdgeColoring(host, tuple(coloring)).colours


def verify_coloring(
    host: Graph,
    coloring: EdgeColoring | Mapping[tuple[int, int], int] | Sequence[int],
    g: Graph,
    h: Graph,
    *,
    induced: bool = True,
) -> Violation | None:
    """``None`` for a good colouring, else the first monochromatic copy found.

    Red copies of ``g`` are looked for before blue copies of ``h``.
    """
    colours = _colours_of(host, coloring)
    find = find_mono_induced if induced else find_mono_subgraph
    emb = find(host, colours, Colour.RED, g)
    if emb is not None:
        return Violation(Colour.RED, emb)
    emb = find(host, colours, Colour.BLUE, h)
    if emb is not None:
        return Violation(Colour.BLUE, emb)
    return None


def is_good_coloring(host: Graph, coloring, g: Graph, h: Graph, *, induced: bool = True) -> bool:
    return verify_coloring(host, coloring, g, h, induced=induced) is None


class Outcome(Enum):
    ARROWS = "Arrows"
    NOT_ARROWS = "NotArrows"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass
class SearchStats:
    nodes: int = 0
    red_copies: int = 0
    blue_copies: int = 0
    budget: int = 0
    backend: str = ""
    seconds: float = 0.0

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "nodes": self.nodes,
            "red_copies": self.red_copies,
            "blue_copies": self.blue_copies,
            "budget": self.budget,
        }
        if timing:
            d["backend"] = self.backend
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class ArrowingVerdict:
    outcome: Outcome
    witness: EdgeColoring | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def arrows(self) -> bool:
        return self.outcome is Outcome.ARROWS


def edge_order(n_edges: int, red_masks: Sequence[int], blue_masks: Sequence[int]) -> tuple[list[int], list[int]]:
    """Decision order and first-tried colour per edge.

    Edges are taken by descending copy incidence; an edge starts with the
    colour that satisfies more of its clauses.
    """
    in_red = [0] * n_edges  # copies of g: clauses wanting blue
    in_blue = [0] * n_edges  # copies of h: clauses wanting red
    for m in red_masks:
        for e in _bits(m):
            in_red[e] += 1
    for m in blue_masks:
        for e in _bits(m):
            in_blue[e] += 1
    order = sorted(
        (e for e in range(n_edges) if in_red[e] or in_blue[e]),
        key=lambda e: (-(in_red[e] + in_blue[e]), e),
    )
    first = [Colour.BLUE if in_red[e] > in_blue[e] else Colour.RED for e in range(n_edges)]
    return order, [int(c) for c in first]


def _decide(host: Graph, g: Graph, h: Graph, budget: int, induced: bool, solver) -> ArrowingVerdict:
    t0 = time.perf_counter()
    copies = induced_copy_masks if induced else subgraph_copy_masks
    red_masks = copies(host, g)
    blue_masks = copies(host, h)
    m = host.num_edges
    want = [int(Colour.BLUE)] * len(red_masks) + [int(Colour.RED)] * len(blue_masks)
    clauses = [list(_bits(x)) for x in red_masks] + [list(_bits(x)) for x in blue_masks]
    order, first = edge_order(m, red_masks, blue_masks)
    fix = -1
    if g.order == h.order and canonical_key(g) == canonical_key(h):
        fix = int(Colour.RED)
    solve = solver or kernel.solve
    status, colours, nodes = solve(m, want, clauses, order, first, fix, budget)
    stats = SearchStats(
        nodes=nodes,
        red_copies=len(red_masks),
        blue_copies=len(blue_masks),
        budget=budget,
        backend="python" if solve is kernel.solve_py else kernel.BACKEND,
        seconds=time.perf_counter() - t0,
    )
    if status == kernel.EXHAUSTED:
        return ArrowingVerdict(Outcome.ARROWS, None, stats)
    if status == kernel.BUDGET:
        return ArrowingVerdict(Outcome.UNKNOWN, None, stats)
    witness = EdgeColoring(host, tuple(colours))
    bad = verify_coloring(host, witness, g, h, induced=induced)
    if bad is not None:
        raise AssertionError(f"search returned a colouring with a {bad.colour} copy: {bad.embedding}")
    return ArrowingVerdict(Outcome.NOT_ARROWS, witness, stats)


def decide_arrowing(host: Graph, g: Graph, h: Graph, budget: int = DEFAULT_BUDGET, *, solver=None) -> ArrowingVerdict:
    """Does ``host`` strongly arrow ``(g, h)``?  Red pattern first."""
    return _decide(host, g, h, budget, True, solver)


def decide_weak_arrowing(host: Graph, g: Graph, h: Graph, budget: int = DEFAULT_BUDGET, *, solver=None) -> ArrowingVerdict:
    """Classical arrowing: monochromatic copies need not be induced."""
    return _decide(host, g, h, budget, False, solver)


def brute_force_arrowing(host: Graph, g: Graph, h: Graph, *, induced: bool = True) -> ArrowingVerdict:
    """Try all 2^|E| colourings through :func:`verify_coloring`."""
    m = host.num_edges
    if m > BRUTE_FORCE_MAX_EDGES:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_MAX_EDGES} edges, host has {m}")
    t0 = time.perf_counter()
    tried = 0
    for colours in product((0, 1), repeat=m):
        tried += 1
        if verify_coloring(host, colours, g, h, induced=induced) is None:
            stats = SearchStats(nodes=tried, budget=2**m, backend="brute", seconds=time.perf_counter() - t0)
            return ArrowingVerdict(Outcome.NOT_ARROWS, EdgeColoring(host, colours), stats)
    stats = SearchStats(nodes=tried, budget=2**m, backend="brute", seconds=time.perf_counter() - t0)
    return ArrowingVerdict(Outcome.ARROWS, None, stats)

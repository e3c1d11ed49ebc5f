"""Pure-Python edge-colouring search (fallback for the compiled kernel).

The problem is a 2-colour constraint system: every clause is a list of
edge indices plus a wanted colour, and is satisfied once any of its edges
gets that colour.  A copy of the red pattern becomes a clause wanting
BLUE, a copy of the blue pattern a clause wanting RED.  The search is a
DPLL loop with unit propagation over a fixed decision order.

Return value of :func:`solve` is ``(status, colours, nodes)`` with status
0 = satisfying colouring found, 1 = exhausted (unsatisfiable),
2 = node budget hit.
"""
from __future__ import annotations

from typing import Sequence

FOUND, EXHAUSTED, BUDGET = 0, 1, 2
UNSET = -1


def solve(
    n_edges: int,
    clause_want: Sequence[int],
    clause_edges: Sequence[Sequence[int]],
    order: Sequence[int],
    first_colour: Sequence[int],
    fix_first: int,
    budget: int,
) -> tuple[int, list[int], int]:
    """Search for a colouring satisfying every clause.

    ``first_colour[e]`` is the colour tried first when branching on edge
    ``e``.  ``fix_first`` >= 0 pins the first decision to that colour
    (colour-swap symmetry breaking); -1 disables it.
    """
    n_clauses = len(clause_want)
    colours = [UNSET] * n_edges
    for c in range(n_clauses):
        if not clause_edges[c]:
            return EXHAUSTED, colours, 0

    occ: list[list[int]] = [[] for _ in range(n_edges)]
    for c, edges in enumerate(clause_edges):
        for e in edges:
            occ[e].append(c)
    size = [len(e) for e in clause_edges]
    nsat = [0] * n_clauses
    nfalse = [0] * n_clauses
    satisfied = 0

    trail: list[int] = []

    def assign(e: int, col: int) -> bool:
        """Set edge e and propagate; False on conflict (assignments stay on trail)."""
        nonlocal satisfied
        queue = [(e, col)]
        ok = True
        while queue:
            e, col = queue.pop()
            cur = colours[e]
            if cur != UNSET:
                if cur != col:
                    ok = False
                    break
                continue
            colours[e] = col
            trail.append(e)
            for c in occ[e]:
                if clause_want[c] == col:
                    if nsat[c] == 0:
                        satisfied += 1
                    nsat[c] += 1
                else:
                    nfalse[c] += 1
                    if nsat[c] == 0:
                        left = size[c] - nfalse[c]
                        if left == 0:
                            ok = False
                        elif left == 1:
                            for f in clause_edges[c]:
                                if colours[f] == UNSET:
                                    queue.append((f, clause_want[c]))
                                    break
            if not ok:
                break
        return ok

    def undo_to(mark: int) -> None:
        nonlocal satisfied
        while len(trail) > mark:
            e = trail.pop()
            col = colours[e]
            for c in occ[e]:
                if clause_want[c] == col:
                    nsat[c] -= 1
                    if nsat[c] == 0:
                        satisfied -= 1
                else:
                    nfalse[c] -= 1
            colours[e] = UNSET

    nodes = 0
    # decision stack entries: (trail mark, order position, edge, alternative colour or UNSET)
    stack: list[tuple[int, int, int, int]] = []
    pos = 0
    first_decision = True

    # root propagation: singleton clauses
    ok = True
    for c in range(n_clauses):
        if size[c] == 1:
            if not assign(clause_edges[c][0], clause_want[c]):
                ok = False
                break
    if not ok:
        return EXHAUSTED, colours, 0

    while True:
        if satisfied == n_clauses:
            return FOUND, [0 if x == UNSET else x for x in colours], nodes
        while pos < len(order) and colours[order[pos]] != UNSET:
            pos += 1
        if pos == len(order):
            # every ordered edge set but some clause unsatisfied cannot happen:
            # order covers all clause edges, and full assignment without conflict
            # satisfies all clauses
            return FOUND, [0 if x == UNSET else x for x in colours], nodes
        if nodes >= budget:
            return BUDGET, colours, nodes
        nodes += 1
        e = order[pos]
        first = first_colour[e]
        alt = 1 - first
        if first_decision and fix_first >= 0:
            first = fix_first
            alt = UNSET
        first_decision = False
        mark = len(trail)
        stack.append((mark, pos, e, alt))
        ok = assign(e, first)
        while not ok:
            # backtrack to the most recent decision with an untried alternative
            while stack and stack[-1][3] == UNSET:
                mark, p, _, _ = stack.pop()
                undo_to(mark)
            if not stack:
                return EXHAUSTED, colours, nodes
            mark, p, e, alt = stack.pop()
            undo_to(mark)
            pos = p
            stack.append((mark, p, e, UNSET))
            ok = assign(e, alt)

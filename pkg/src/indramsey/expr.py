"""Tiny language for naming graphs on the command line.

    expr   := term ('+' term)*
    term   := [multiplier] family
    family := ('P' | 'C' | 'K' | 'S') int (',' int)*

``K3,3,2`` is complete multipartite, ``S3`` the star with three edges and
``3P3`` three disjoint copies of P3.  A graph6 literal is written ``g6:<data>``;
a bare string that is not a family expression is also tried as graph6.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import graph6
from .graphs import Graph, complete, complete_multipartite, cycle, disjoint_union, path, star

_TERM = re.compile(r"^(\d*)([PCKS])(\d+(?:,\d+)*)$")


class ExprError(ValueError):
    pass


@dataclass(frozen=True)
class Term:
    multiplier: int
    family: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        m = "" if self.multiplier == 1 else str(self.multiplier)
        return f"{m}{self.family}{','.join(map(str, self.params))}"

    def graph(self) -> Graph:
        f, p = self.family, self.params
        if f != "K" and len(p) != 1:
            raise ExprError(f"{f} takes exactly one size, got {self}")
        if f == "P":
            base = path(p[0])
        elif f == "C":
            base = cycle(p[0])
        elif f == "S":
            base = star(p[0])
        elif len(p) == 1:
            base = complete(p[0])
        else:
            base = complete_multipartite(*p)
        return disjoint_union(*([base] * self.multiplier))


@dataclass(frozen=True)
class GraphExpr:
    terms: tuple[Term, ...] = ()
    graph6: str | None = None

    def __str__(self) -> str:
        if self.graph6 is not None:
            return f"g6:{self.graph6}"
        return "+".join(str(t) for t in self.terms)

    def graph(self) -> Graph:
        if self.graph6 is not None:
            return graph6.decode(self.graph6)
        try:
            return disjoint_union(*(t.graph() for t in self.terms))
        except ValueError as exc:
            raise ExprError(f"{self}: {exc}") from exc


def parse_expr(text: str) -> GraphExpr:
    s = text.strip()
    if not s:
        raise ExprError("empty graph expression")
    if s.startswith("g6:"):
        data = s[3:]
        try:
            graph6.decode(data)
        except graph6.Graph6Error as exc:
            raise ExprError(f"bad graph6 literal {data!r}: {exc}") from exc
        return GraphExpr(graph6=data)
    terms = []
    for part in s.replace(" ", "").split("+"):
        m = _TERM.match(part)
        if m is None:
            break
        mult = int(m.group(1)) if m.group(1) else 1
        if mult < 1:
            raise ExprError(f"multiplier must be positive in {part!r}")
        terms.append(Term(mult, m.group(2), tuple(int(x) for x in m.group(3).split(","))))
    else:
        expr = GraphExpr(tuple(terms))
        expr.graph()  # validate sizes now
        return expr
    try:
        graph6.decode(s)
    except graph6.Graph6Error:
        raise ExprError(f"cannot parse graph expression {text!r}") from None
    return GraphExpr(graph6=s)


def parse_graph(text: str) -> Graph:
    return parse_expr(text).graph()

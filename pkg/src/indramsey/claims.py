"""Table of published induced Ramsey results and a harness that checks them.

Parametric statements are instantiated at small parameters.  Each record
says how it can be checked at desk scale:

* ``ExactDesk``: the value is computed by an exhaustive order sweep;
* ``ConstructionOnly``: a named host is shown to arrow (upper side only);
* ``BoundsOnly``: computed bounds must not contradict the stated ones;
* ``OutOfScope``: recorded for coverage, never run.

Some records carry a *special* check: a strategy run over every host of an
order, a sampled search, or a structural property.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .arrow import DEFAULT_BUDGET, Outcome, decide_arrowing, decide_weak_arrowing, verify_coloring
from .expr import parse_graph
from .generate import count, generate
from .graph6 import encode
from .graphs import Graph, complete, copies, is_connected
from .ramsey import (
    IRResult,
    Status,
    hosts_of_order,
    ir_exact,
    ir_exact_multicopy,
    ir_lower,
    ir_upper_by_construction,
    split_copies,
)
from .strategies import (
    StrategyError,
    avoid_2k2_coloring,
    induced_matchings,
    matching_partition,
    matching_partition_excess,
    triangle_coloring,
)

EXTENDED_BUDGET = 100_000_000
QUICK_CAP = 7  # largest order swept for bounds checks in the quick profile
QUICK, FULL = "quick", "full"


class Feasibility(Enum):
    EXACT_DESK = "ExactDesk"
    CONSTRUCTION_ONLY = "ConstructionOnly"
    BOUNDS_ONLY = "BoundsOnly"
    OUT_OF_SCOPE = "OutOfScope"

    def __str__(self) -> str:
        return self.value


class ClaimStatus(Enum):
    VERIFIED = "Verified"
    CONSTRUCTION_VERIFIED = "ConstructionVerified"
    BOUNDS_CONSISTENT = "BoundsConsistent"
    SKIPPED = "Skipped"
    FAILED = "FAILED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClaimRecord:
    key: str
    anchor: str  # which published statement this instantiates
    citation: str  # the statement, as a formula
    red: str
    blue: str
    feasibility: Feasibility
    value: int | None = None
    lower: float | None = None
    upper: float | None = None
    host: str | None = None  # arrowing host for construction checks; None = search constructions
    full_only: bool = False  # the exhaustive part runs only in the full profile
    cap: int = 8
    multicopy: bool = False
    special: str | None = None
    budget: int = DEFAULT_BUDGET

    @property
    def pair(self) -> tuple[Graph, Graph]:
        return parse_graph(self.red), parse_graph(self.blue)

    def claimed(self) -> tuple[float, float]:
        if self.value is not None:
            return self.value, self.value
        return (self.lower if self.lower is not None else -math.inf,
                self.upper if self.upper is not None else math.inf)


def _rec(key, anchor, citation, red, blue, feas, **kw) -> ClaimRecord:
    return ClaimRecord(key, anchor, citation, red, blue, Feasibility(feas), **kw)


E, C, B = "ExactDesk", "ConstructionOnly", "BoundsOnly"

# every published statement that the table must cover
ANCHORS = (
    "multiple-copies-observation",
    "k2-versus-any",
    "any-versus-k2",
    "cliques-equal-ramsey",
    "connected-clique-lower-bound",
    "matching-versus-clique",
    "matching-versus-matching",
    "p3-versus-union-of-cliques",
    "p3-versus-copies-of-clique",
    "p3-versus-union-of-multipartite",
    "p3-versus-copies-of-multipartite",
    "p3-versus-copies-of-p4",
    "copies-versus-2k2",
    "no-isolated-versus-2k2-lower",
    "no-isolated-versus-2k2-interval",
    "paths-2k2",
    "copies-of-paths-2k2-upper",
    "copies-of-paths-2k2-small-s",
    "copies-of-paths-2k2-large-s",
    "copies-of-p3-2k2",
    "p3-versus-matching",
    "p4-versus-matching",
    "paths-versus-matching-upper",
    "p3-versus-copies-of-p3",
    "copies-of-p3-versus-clique",
    "2p3-versus-k3-lower",
    "ramsey-copies-of-triangles",
    "k3-versus-copies-of-k3",
    "induced-matching-partition",
    "minimal-host-connected",
)


def claims_table() -> list[ClaimRecord]:
    """Every instantiated claim, in a fixed order."""
    return [
        # disjoint copies of a host
        _rec("obs-2P3-2K2", "multiple-copies-observation", "(s+t-1)F -> (sG, tH) when F -> (G, H)",
             "2P3", "2K2", C, host="3P3"),
        _rec("obs-P4-2K2", "multiple-copies-observation", "(s+t-1)F -> (sG, tH) when F -> (G, H)",
             "P4", "2K2", C, host="2P4"),
        _rec("obs-2K2-2K2", "multiple-copies-observation", "(s+t-1)F -> (sG, tH) when F -> (G, H)",
             "2K2", "2K2", C, host="3K2"),
        _rec("k2-P4", "k2-versus-any", "IR(K2, G) = |V(G)|", "K2", "P4", E, value=4),
        _rec("k2-C5", "k2-versus-any", "IR(K2, G) = |V(G)|", "K2", "C5", E, value=5),
        _rec("P4-k2", "any-versus-k2", "IR(G, K2) = |V(G)|", "P4", "K2", E, value=4),
        _rec("S3-k2", "any-versus-k2", "IR(G, K2) = |V(G)|", "S3", "K2", E, value=4),
        _rec("K3-K3", "cliques-equal-ramsey", "IR(Km, Kn) = R(Km, Kn)", "K3", "K3", E, value=6),
        _rec("K3-K3-weak", "cliques-equal-ramsey", "R(K3, K3) = 6", "K3", "K3", E, value=6,
             special="weak_ramsey"),
        _rec("gorgol-P3-K3", "connected-clique-lower-bound",
             "IR(G, H) >= (alpha(G)-1) omega(H)(omega(H)-1)/2 + omega(H), G connected",
             "P3", "K3", B, lower=6, special="lower_bound_formula"),
        _rec("gorgol-P4-K3", "connected-clique-lower-bound",
             "IR(G, H) >= (alpha(G)-1) omega(H)(omega(H)-1)/2 + omega(H), G connected",
             "P4", "K3", B, lower=6, cap=7, special="lower_bound_formula"),
        # matchings
        _rec("sK2-K3-s1", "matching-versus-clique", "IR(sK2, Kn) = sn", "K2", "K3", E, value=3),
        _rec("sK2-K3-s2", "matching-versus-clique", "IR(sK2, Kn) = sn", "2K2", "K3", E, value=6),
        _rec("sK2-K2-s3", "matching-versus-clique", "IR(sK2, Kn) = sn", "3K2", "K2", E, value=6),
        _rec("sK2-tK2-1-1", "matching-versus-matching", "IR(sK2, tK2) = 2(s+t-1)", "K2", "K2", E, value=2),
        _rec("sK2-tK2-1-2", "matching-versus-matching", "IR(sK2, tK2) = 2(s+t-1)", "K2", "2K2", E, value=4),
        _rec("sK2-tK2-2-2", "matching-versus-matching", "IR(sK2, tK2) = 2(s+t-1)", "2K2", "2K2", E, value=6),
        _rec("sK2-tK2-1-3", "matching-versus-matching", "IR(sK2, tK2) = 2(s+t-1)", "K2", "3K2", E, value=6),
        _rec("sK2-tK2-2-3", "matching-versus-matching", "IR(sK2, tK2) = 2(s+t-1)", "2K2", "3K2", E, value=8),
        # P3 against unions
        _rec("P3-K2", "p3-versus-union-of-cliques", "IR(P3, K_n1 + ... + K_nm) = sum binom(ni+1, 2)",
             "P3", "K2", E, value=3),
        _rec("P3-K3", "p3-versus-union-of-cliques", "IR(P3, K_n1 + ... + K_nm) = sum binom(ni+1, 2)",
             "P3", "K3", E, value=6),
        _rec("P3-K3+K2", "p3-versus-union-of-cliques", "IR(P3, K_n1 + ... + K_nm) = sum binom(ni+1, 2)",
             "P3", "K3+K2", E, value=9, full_only=True),
        _rec("P3-2K2", "p3-versus-copies-of-clique", "IR(P3, tKn) = t(binom(n, 2) + n)",
             "P3", "2K2", E, value=6, multicopy=True),
        _rec("P3-2K3", "p3-versus-copies-of-clique", "IR(P3, tKn) = t(binom(n, 2) + n)",
             "P3", "2K3", C, value=12),
        _rec("P3-P3+K2", "p3-versus-union-of-multipartite", "IR(P3, H1 + ... + Hm) = sum IR(P3, Hi)",
             "P3", "P3+K2", E, value=7),
        _rec("P3-2P3-multipartite", "p3-versus-copies-of-multipartite", "IR(P3, tH) = t IR(P3, H)",
             "P3", "2P3", E, value=8, multicopy=True),
        _rec("P3-sP4-s1", "p3-versus-copies-of-p4", "7s >= IR(P3, sP4) >= 6.1s",
             "P3", "P4", B, lower=6.1, upper=7, cap=7),
        # G versus 2K2
        _rec("sG-2K2-K2-s2", "copies-versus-2k2", "IR(sG, 2K2) = (s+1)|V(G)|, G connected, s >= |V(G)|",
             "2K2", "2K2", E, value=6),
        _rec("sG-2K2-K2-s3", "copies-versus-2k2", "IR(sG, 2K2) = (s+1)|V(G)|, G connected, s >= |V(G)|",
             "3K2", "2K2", E, value=8),
        _rec("sG-2K2-P3-s3", "copies-versus-2k2", "IR(sG, 2K2) = (s+1)|V(G)|, G connected, s >= |V(G)|",
             "3P3", "2K2", C, value=12, host="4P3"),
        _rec("avoid-2K2-P4", "no-isolated-versus-2k2-lower", "IR(G, 2K2) >= |V(G)| + 2, no isolated vertices",
             "P4", "2K2", B, lower=6, special="avoid_2k2"),
        _rec("avoid-2K2-K3", "no-isolated-versus-2k2-lower", "IR(G, 2K2) >= |V(G)| + 2, no isolated vertices",
             "K3", "2K2", B, lower=5, special="avoid_2k2"),
        _rec("avoid-2K2-C4", "no-isolated-versus-2k2-lower", "IR(G, 2K2) >= |V(G)| + 2, no isolated vertices",
             "C4", "2K2", B, lower=6, special="avoid_2k2"),
        _rec("avoid-2K2-K4", "no-isolated-versus-2k2-lower", "IR(G, 2K2) >= |V(G)| + 2, no isolated vertices",
             "K4", "2K2", B, lower=6, special="avoid_2k2"),
        _rec("interval-2K2-K2", "no-isolated-versus-2k2-interval", "n+2 <= IR(G, 2K2) <= 2n",
             "K2", "2K2", B, lower=4, upper=4),
        _rec("interval-2K2-K3", "no-isolated-versus-2k2-interval", "n+2 <= IR(G, 2K2) <= 2n",
             "K3", "2K2", B, lower=5, upper=6),
        _rec("interval-2K2-C4", "no-isolated-versus-2k2-interval", "n+2 <= IR(G, 2K2) <= 2n",
             "C4", "2K2", B, lower=6, upper=8),
        # paths and matchings
        _rec("Pn-2K2-n3", "paths-2k2", "IR(Pn, 2K2) = n+3 (n = 3, 4), n+2 (n >= 5)", "P3", "2K2", E, value=6),
        _rec("Pn-2K2-n4", "paths-2k2", "IR(Pn, 2K2) = n+3 (n = 3, 4), n+2 (n >= 5)", "P4", "2K2", E, value=7),
        _rec("Pn-2K2-n5", "paths-2k2", "IR(Pn, 2K2) = n+3 (n = 3, 4), n+2 (n >= 5)", "P5", "2K2", E, value=7),
        _rec("Pn-2K2-n6", "paths-2k2", "IR(Pn, 2K2) = n+3 (n = 3, 4), n+2 (n >= 5)", "P6", "2K2", E, value=8),
        _rec("Pn-2K2-n7", "paths-2k2", "IR(Pn, 2K2) = n+3 (n = 3, 4), n+2 (n >= 5)", "P7", "2K2", E,
             value=9, full_only=True, host="C9"),
        _rec("sPn-2K2-upper-2-5", "copies-of-paths-2k2-upper", "IR(sPn, 2K2) <= sn+s+1, 2 <= s <= n-1, n >= 4",
             "2P5", "2K2", C, upper=13, host="C13"),
        _rec("sPn-2K2-upper-4-5", "copies-of-paths-2k2-upper", "IR(sPn, 2K2) <= sn+s+1, 2 <= s <= n-1, n >= 4",
             "4P5", "2K2", C, upper=25, host="C25"),
        _rec("sPn-2K2-eq-2-4", "copies-of-paths-2k2-small-s", "IR(sPn, 2K2) = sn+s+1, s = 2, 3, n >= 4",
             "2P4", "2K2", C, value=11, host="C11"),
        _rec("sPn-2K2-eq-3-4", "copies-of-paths-2k2-small-s", "IR(sPn, 2K2) = sn+s+1, s = 2, 3, n >= 4",
             "3P4", "2K2", C, value=16, host="C16"),
        _rec("sPn-2K2-large-4-4", "copies-of-paths-2k2-large-s", "IR(sPn, 2K2) = (s+1)n, s >= n, n >= 4",
             "4P4", "2K2", C, value=20, host="5P4"),
        _rec("sP3-2K2-s1", "copies-of-p3-2k2", "IR(sP3, 2K2) = 3s+3", "P3", "2K2", E, value=6),
        _rec("sP3-2K2-s2", "copies-of-p3-2k2", "IR(sP3, 2K2) = 3s+3", "2P3", "2K2", E, value=9,
             full_only=True, host="3P3"),
        _rec("P3-tK2-t1", "p3-versus-matching", "IR(P3, tK2) = 3t", "P3", "K2", E, value=3),
        _rec("P3-tK2-t2", "p3-versus-matching", "IR(P3, tK2) = 3t", "P3", "2K2", E, value=6, multicopy=True),
        _rec("P3-tK2-t3", "p3-versus-matching", "IR(P3, tK2) = 3t", "P3", "3K2", E, value=9, multicopy=True,
             full_only=True, host="3P3"),
        _rec("P4-tK2-t1", "p4-versus-matching", "3t+1 <= IR(P4, tK2) <= 7 floor(t/2) + 4 rem(t, 2)",
             "P4", "K2", B, lower=4, upper=4),
        _rec("P4-tK2-t2", "p4-versus-matching", "3t+1 <= IR(P4, tK2) <= 7 floor(t/2) + 4 rem(t, 2)",
             "P4", "2K2", B, lower=7, upper=7),
        _rec("P4-tK2-t3", "p4-versus-matching", "3t+1 <= IR(P4, tK2) <= 7 floor(t/2) + 4 rem(t, 2)",
             "P4", "3K2", B, lower=10, upper=11),
        _rec("Pn-tK2-5-3", "paths-versus-matching-upper", "IR(Pn, tK2) <= ceil(t/2) n + t - rem(t, 2), n >= 5",
             "P5", "3K2", C, upper=12, host="C7+P5"),
        _rec("Pn-tK2-5-4", "paths-versus-matching-upper", "IR(Pn, tK2) <= ceil(t/2) n + t - rem(t, 2), n >= 5",
             "P5", "4K2", C, upper=14, host="2C7"),
        _rec("Pn-tK2-6-3", "paths-versus-matching-upper", "IR(Pn, tK2) <= ceil(t/2) n + t - rem(t, 2), n >= 5",
             "P6", "3K2", C, upper=14, host="C8+P6"),
        _rec("P3-tP3-t1", "p3-versus-copies-of-p3", "IR(P3, tP3) = 4t", "P3", "P3", E, value=4),
        _rec("P3-tP3-t2", "p3-versus-copies-of-p3", "IR(P3, tP3) = 4t", "P3", "2P3", E, value=8),
        # paths versus cliques
        _rec("sP3-Kn-1-3", "copies-of-p3-versus-clique",
             "binom(n+1, 2) + (2s-2)(n-1) <= IR(sP3, Kn) <= s(binom(n, 2) + n)", "P3", "K3", B, lower=6, upper=6),
        _rec("sP3-Kn-2-3", "copies-of-p3-versus-clique",
             "binom(n+1, 2) + (2s-2)(n-1) <= IR(sP3, Kn) <= s(binom(n, 2) + n)", "2P3", "K3", B, lower=10, upper=12),
        _rec("2P3-K3-ge-11", "2p3-versus-k3-lower", "IR(2P3, K3) >= 11", "2P3", "K3", B, lower=11,
             special="sampled_order10"),
        # triangles
        _rec("R-K3-2K3", "ramsey-copies-of-triangles", "R(sK3, tK3) = 2s+3t, t >= s >= 1, t >= 2",
             "K3", "2K3", E, value=8, special="weak_ramsey"),
        _rec("K3-tK3-t1", "k3-versus-copies-of-k3", "IR(K3, tK3) = 6t", "K3", "K3", E, value=6),
        _rec("K3-tK3-t2", "k3-versus-copies-of-k3", "IR(K3, tK3) = 6t", "K3", "2K3", C, value=12,
             host="2K6", budget=EXTENDED_BUDGET),
        _rec("K3-tK3-t2-colourings", "k3-versus-copies-of-k3", "IR(K3, tK3) = 6t", "K3", "2K3", B, lower=12,
             special="triangle_colouring"),
        _rec("matching-partition", "induced-matching-partition",
             "V = V1 + V2 with every induced matching having at most n/3 edges inside a part",
             "K2", "K2", B, special="matching_partition"),
        _rec("minimal-host-connected-P5-2K2", "minimal-host-connected",
             "f_t < min over partitions of sum f_ti implies every order-f_t arrowing host is connected",
             "P5", "2K2", B, value=7, special="connected_minimal"),
    ]


# -- report ------------------------------------------------------------------


@dataclass
class ClaimResult:
    key: str
    anchor: str
    citation: str
    feasibility: Feasibility
    status: ClaimStatus
    detail: str
    computed: list | None = None
    nodes: int = 0
    hosts: int = 0
    evidence: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "key": self.key,
            "anchor": self.anchor,
            "citation": self.citation,
            "feasibility": str(self.feasibility),
            "status": str(self.status),
            "detail": self.detail,
            "computed": self.computed,
            "nodes": self.nodes,
            "hosts": self.hosts,
            "evidence": list(self.evidence),
        }
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


@dataclass
class VerificationReport:
    profile: str
    seed: int
    entries: list[ClaimResult]

    @property
    def failed(self) -> list[ClaimResult]:
        return [e for e in self.entries if e.status is ClaimStatus.FAILED]

    @property
    def ok(self) -> bool:
        return not self.failed

    def counts(self) -> dict[str, int]:
        out = {str(s): 0 for s in ClaimStatus}
        for e in self.entries:
            out[str(e.status)] += 1
        return out

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "profile": self.profile,
            "seed": self.seed,
            "counts": self.counts(),
            "claims": [e.as_dict(timing) for e in self.entries],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        width = max((len(e.key) for e in self.entries), default=10)
        lines = [f"{e.key:<{width}}  {str(e.status):<20}  {e.detail}" for e in self.entries]
        counts = ", ".join(f"{k} {v}" for k, v in self.counts().items() if v)
        lines.append(f"{len(self.entries)} claims ({self.profile} profile): {counts}")
        return "\n".join(lines) + "\n"


# -- checks ------------------------------------------------------------------


def _interval_text(lo, hi) -> str:
    if lo == hi:
        return str(lo)
    return f"[{lo}, {'?' if hi is None else hi}]"


def _ir_result(rec: ClaimRecord, budget: int, jobs: int, cap: int | None = None) -> IRResult:
    g, h = rec.pair
    cap = rec.cap if cap is None else cap
    if rec.multicopy:
        sc = split_copies(h)
        assert sc is not None
        return ir_exact_multicopy(g, sc[1], sc[0], cap, budget, jobs=jobs)
    return ir_exact(g, h, cap, budget, jobs=jobs)


def _sweep_counts(res: IRResult) -> tuple[int, int]:
    return sum(s.nodes for s in res.sweeps), sum(s.hosts for s in res.sweeps)


def _contradicts(rec: ClaimRecord, lo: float, hi: float | None) -> bool:
    c_lo, c_hi = rec.claimed()
    top = math.inf if hi is None else hi
    return lo > c_hi or top < c_lo


def _construction(rec: ClaimRecord, budget: int) -> ClaimResult:
    g, h = rec.pair
    if rec.host is not None:
        host = parse_graph(rec.host)
        verdict = decide_arrowing(host, g, h, max(budget, rec.budget))
        name = rec.host
    else:
        cons = ir_upper_by_construction(g, h, max(budget, rec.budget))
        if cons is None:
            return _result(rec, ClaimStatus.SKIPPED, "no construction host confirmed")
        host, name = cons.host, cons.description
        verdict = decide_arrowing(host, g, h, max(budget, rec.budget))
    _, c_hi = rec.claimed()
    if verdict.outcome is Outcome.NOT_ARROWS:
        return _result(rec, ClaimStatus.FAILED, f"host {name} does not arrow", nodes=verdict.stats.nodes)
    if verdict.outcome is Outcome.UNKNOWN:
        return _result(rec, ClaimStatus.SKIPPED, f"host {name}: budget {verdict.stats.budget} exhausted",
                       nodes=verdict.stats.nodes)
    if host.order > c_hi:
        return _result(rec, ClaimStatus.FAILED, f"host {name} has order {host.order} above the claim")
    return _result(rec, ClaimStatus.CONSTRUCTION_VERIFIED,
                   f"{name} ({host.order} vertices) arrows", computed=[None, host.order],
                   nodes=verdict.stats.nodes, hosts=1)


def _result(rec: ClaimRecord, status: ClaimStatus, detail: str, **kw) -> ClaimResult:
    return ClaimResult(rec.key, rec.anchor, rec.citation, rec.feasibility, status, detail, **kw)


def _exact(rec: ClaimRecord, budget: int, jobs: int) -> ClaimResult:
    res = _ir_result(rec, budget, jobs)
    nodes, hosts = _sweep_counts(res)
    computed = [res.lo, res.hi]
    if res.status is Status.EXACT:
        if res.value == rec.value:
            below = sum(1 for s in res.sweeps if s.order == res.value - 1 and s.complete_not_arrowing)
            kind = "connected " if res.manifest_kind == "connected" else ""
            n_below = len(res.witnesses_at(res.value - 1))
            return _result(rec, ClaimStatus.VERIFIED,
                           f"= {res.value}: {n_below} {kind}hosts of order {res.value - 1} have good colourings"
                           f"{'' if below else ' (no sweep needed)'}; {res.arrow_source} arrows",
                           computed=computed, nodes=nodes, hosts=hosts)
        return _result(rec, ClaimStatus.FAILED, f"computed {res.value}, claimed {rec.value}",
                       computed=computed, nodes=nodes, hosts=hosts)
    if _contradicts(rec, res.lo, res.hi):
        return _result(rec, ClaimStatus.FAILED, f"computed {_interval_text(res.lo, res.hi)} excludes the claim",
                       computed=computed, nodes=nodes, hosts=hosts)
    return _result(rec, ClaimStatus.SKIPPED, f"only {_interval_text(res.lo, res.hi)} within cap/budget",
                   computed=computed, nodes=nodes, hosts=hosts)


def _bounds(rec: ClaimRecord, profile: str, budget: int, jobs: int) -> ClaimResult:
    g, h = rec.pair
    lo = ir_lower(g, h)
    cons = ir_upper_by_construction(g, h, budget)
    hi = cons.order if cons is not None else None
    parts = [f"lower bound {lo}"]
    if hi is not None:
        parts.append(f"construction {hi}")
    nodes = hosts = 0
    cap = rec.cap if profile == FULL else min(rec.cap, QUICK_CAP)
    if lo - 1 <= cap:
        res = _ir_result(rec, budget, jobs, cap)
        nodes, hosts = _sweep_counts(res)
        lo = max(lo, res.lo)
        if res.hi is not None:
            hi = res.hi if hi is None else min(hi, res.hi)
        parts.append(f"sweep {_interval_text(res.lo, res.hi)}")
    if _contradicts(rec, lo, hi):
        return _result(rec, ClaimStatus.FAILED, f"computed {_interval_text(lo, hi)} contradicts the claim",
                       computed=[lo, hi], nodes=nodes, hosts=hosts)
    return _result(rec, ClaimStatus.BOUNDS_CONSISTENT, "; ".join(parts) + " agree with the claim",
                   computed=[lo, hi], nodes=nodes, hosts=hosts)


# -- special checks ----------------------------------------------------------


def _check_weak_ramsey(rec: ClaimRecord, budget: int, **_) -> ClaimResult:
    g, h = rec.pair
    v = rec.value
    assert v is not None
    yes = decide_weak_arrowing(complete(v), g, h, budget)
    no = decide_weak_arrowing(complete(v - 1), g, h, budget)
    nodes = yes.stats.nodes + no.stats.nodes
    if yes.outcome is Outcome.UNKNOWN or no.outcome is Outcome.UNKNOWN:
        return _result(rec, ClaimStatus.SKIPPED, "budget exhausted", nodes=nodes)
    if yes.arrows and no.outcome is Outcome.NOT_ARROWS:
        return _result(rec, ClaimStatus.VERIFIED, f"K{v} arrows, K{v - 1} has a good colouring (weak)",
                       computed=[v, v], nodes=nodes, hosts=2)
    return _result(rec, ClaimStatus.FAILED, f"K{v}: {yes.outcome}, K{v - 1}: {no.outcome}", nodes=nodes)


def _check_lower_formula(rec: ClaimRecord, budget: int, jobs: int, **_) -> ClaimResult:
    g, h = rec.pair
    lo = ir_lower(g, h)
    if rec.lower is not None and lo < rec.lower:
        return _result(rec, ClaimStatus.FAILED, f"lower bound evaluates to {lo}, claimed {rec.lower}")
    res = ir_exact(g, h, rec.cap, budget, jobs=jobs)
    nodes, hosts = _sweep_counts(res)
    if res.hi is not None and res.hi < lo:
        return _result(rec, ClaimStatus.FAILED, f"computed {_interval_text(res.lo, res.hi)} is below {lo}",
                       nodes=nodes, hosts=hosts)
    return _result(rec, ClaimStatus.BOUNDS_CONSISTENT,
                   f"bound {lo} <= computed {_interval_text(res.lo, res.hi)}",
                   computed=[res.lo, res.hi], nodes=nodes, hosts=hosts)


def _check_avoid_2k2(rec: ClaimRecord, **_) -> ClaimResult:
    g, _h = rec.pair
    n = 0
    h = copies(2, complete(2))
    for host in generate(g.order + 1):
        n += 1
        col = avoid_2k2_coloring(host, g)
        if col is None:
            continue
        if verify_coloring(host, col, g, h) is not None:  # already checked inside; belt and braces
            return _result(rec, ClaimStatus.FAILED, f"bad colouring on {encode(host)}")
    return _result(rec, ClaimStatus.BOUNDS_CONSISTENT,
                   f"good colourings built for all {n} hosts of order {g.order + 1}",
                   computed=[g.order + 2, None], hosts=n)


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _check_sampled_order10(rec: ClaimRecord, profile: str, budget: int, seed: int, **_) -> ClaimResult:
    g, h = rec.pair
    rng = random.Random(seed)
    samples = 30 if profile == QUICK else 100
    nodes = unknown = 0
    for i in range(samples):
        host = _random_graph(rng, 10, rng.choice((0.3, 0.5, 0.7)))
        v = decide_arrowing(host, g, h, budget)
        nodes += v.stats.nodes
        if v.arrows:
            return _result(rec, ClaimStatus.FAILED, f"sampled host {encode(host)} of order 10 arrows", nodes=nodes)
        if v.outcome is Outcome.UNKNOWN:
            unknown += 1
    lo = ir_lower(g, h)
    cons = ir_upper_by_construction(g, h, budget)
    hi = cons.order if cons else None
    note = f", {unknown} undecided" if unknown else ""
    return _result(rec, ClaimStatus.BOUNDS_CONSISTENT,
                   f"{samples - unknown} sampled order-10 hosts (seed {seed}) have good colourings{note}; "
                   f"construction {hi}", computed=[lo, hi], nodes=nodes, hosts=samples)


def _check_triangle_colouring(rec: ClaimRecord, profile: str, seed: int, **_) -> ClaimResult:
    t = 2
    rng = random.Random(seed)
    want = 100 if profile == QUICK else 300
    done = tries = 0
    tk3 = copies(t, complete(3))
    while done < want and tries < 50 * want:
        tries += 1
        # plant an induced 2K3 on the first six vertices, random elsewhere
        host = _random_graph(rng, 11, rng.choice((0.2, 0.4, 0.6)))
        edges = {e for e in host.edges() if not (e[0] < 6 and e[1] < 6)}
        edges |= {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
        host = Graph(11, sorted(edges))
        try:
            col = triangle_coloring(host, t)
        except StrategyError as exc:
            return _result(rec, ClaimStatus.FAILED, f"{encode(host)}: {exc}", hosts=done)
        if col is None:
            return _result(rec, ClaimStatus.FAILED, f"{encode(host)}: no colouring although 2K3 is induced")
        if verify_coloring(host, col, complete(3), tk3) is not None:
            return _result(rec, ClaimStatus.FAILED, f"{encode(host)}: colouring is not good")
        done += 1
    return _result(rec, ClaimStatus.BOUNDS_CONSISTENT,
                   f"good colourings on {done} sampled 11-vertex hosts containing induced 2K3 (seed {seed})",
                   computed=[12, None], hosts=done)


def _check_matching_partition(rec: ClaimRecord, profile: str, **_) -> ClaimResult:
    top = 7 if profile == QUICK else 8
    total = 0
    for n in range(1, top + 1):
        for g in hosts_of_order(n):
            part = matching_partition(g)
            if 3 * matching_partition_excess(g, part, induced_matchings(g)) > n:
                return _result(rec, ClaimStatus.FAILED, f"{encode(g)}: bipartition exceeds n/3")
            total += 1
        if total != sum(count(k) for k in range(1, n + 1)):
            return _result(rec, ClaimStatus.FAILED, f"order {n}: host count mismatch")
    return _result(rec, ClaimStatus.VERIFIED, f"certified bipartitions for all {total} graphs of order <= {top}",
                   hosts=total)


def _check_connected_minimal(rec: ClaimRecord, budget: int, jobs: int, **_) -> ClaimResult:
    g, h = rec.pair
    sc = split_copies(h)
    assert sc is not None and rec.value is not None
    t, base = sc
    f1 = ir_exact(g, base, rec.cap, budget, jobs=jobs)
    ft = ir_exact(g, h, rec.cap, budget, jobs=jobs)
    if ft.value != rec.value or f1.value is None or ft.value >= t * f1.value:
        return _result(rec, ClaimStatus.FAILED, f"premise fails: f_1 = {f1.value}, f_{t} = {ft.value}")
    n = 0
    nodes = 0
    for host in hosts_of_order(rec.value):
        if is_connected(host):
            continue
        n += 1
        v = decide_arrowing(host, g, h, budget)
        nodes += v.stats.nodes
        if v.arrows:
            return _result(rec, ClaimStatus.FAILED, f"disconnected host {encode(host)} arrows", nodes=nodes)
        if v.outcome is Outcome.UNKNOWN:
            return _result(rec, ClaimStatus.SKIPPED, f"budget exhausted on {encode(host)}", nodes=nodes)
    return _result(rec, ClaimStatus.VERIFIED,
                   f"f_{t} = {ft.value} < {t * f1.value}; none of the {n} disconnected order-{rec.value} hosts arrows",
                   computed=[ft.value, ft.value], nodes=nodes, hosts=n)


_SPECIAL: dict[str, Callable[..., ClaimResult]] = {
    "weak_ramsey": _check_weak_ramsey,
    "lower_bound_formula": _check_lower_formula,
    "avoid_2k2": _check_avoid_2k2,
    "sampled_order10": _check_sampled_order10,
    "triangle_colouring": _check_triangle_colouring,
    "matching_partition": _check_matching_partition,
    "connected_minimal": _check_connected_minimal,
}


def verify_claim(rec: ClaimRecord, profile: str = QUICK, budget: int = DEFAULT_BUDGET, *,
                 jobs: int = 1, seed: int = 0) -> ClaimResult:
    if profile not in (QUICK, FULL):
        raise ValueError(f"unknown profile {profile!r}")
    t0 = time.perf_counter()
    if rec.feasibility is Feasibility.OUT_OF_SCOPE:
        out = _result(rec, ClaimStatus.SKIPPED, "out of desk scale")
    elif rec.special is not None:
        out = _SPECIAL[rec.special](rec, profile=profile, budget=budget, jobs=jobs, seed=seed)
    elif rec.feasibility is Feasibility.CONSTRUCTION_ONLY:
        out = _construction(rec, budget)
    elif rec.feasibility is Feasibility.BOUNDS_ONLY:
        out = _bounds(rec, profile, budget, jobs)
    elif rec.full_only and profile == QUICK:
        out = _construction(rec, budget)
        if out.status is ClaimStatus.CONSTRUCTION_VERIFIED:
            out.detail += "; exhaustive sweep runs in the full profile"
    else:
        out = _exact(rec, budget, jobs)
    out.seconds = time.perf_counter() - t0
    return out


def verify_all(profile: str = QUICK, budget: int = DEFAULT_BUDGET, *, jobs: int = 1, seed: int = 0,
               progress: Callable[[ClaimResult], None] | None = None) -> VerificationReport:
    entries = []
    for rec in claims_table():
        res = verify_claim(rec, profile, budget, jobs=jobs, seed=seed)
        if progress is not None:
            progress(res)
        entries.append(res)
    return VerificationReport(profile, seed, entries)


__all__ = [
    "ANCHORS",
    "ClaimRecord",
    "ClaimResult",
    "ClaimStatus",
    "Feasibility",
    "VerificationReport",
    "claims_table",
    "verify_all",
    "verify_claim",
]

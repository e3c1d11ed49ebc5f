"""Induced Ramsey numbers at desk scale, with certificates.

``ir_exact`` sweeps host orders upward.  Every host of an order is either
shown not to arrow (a good colouring is stored) or shown to arrow (search
exhausted); an order where some host stayed undecided within the node
budget is *tainted* and the answer degrades to an interval.
"""
from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterator

from .arrow import DEFAULT_BUDGET, EdgeColoring, Outcome, SearchStats, decide_arrowing, verify_coloring
from .canon import canonical_key, canonical_labeling
from .generate import MAX_GENERATE_ORDER, GenFilter, count, generate
from .graph6 import decode, encode
from .graphs import (
    Graph,
    complete,
    components,
    copies,
    cycle,
    disjoint_union,
    has_isolated_vertex,
    independence_number,
    clique_number,
    is_connected,
    path,
)
from .strategies import gorgol_lower_bound

log = logging.getLogger(__name__)

DEFAULT_CAP = 8


class Status(Enum):
    EXACT = "Exact"
    BOUNDS = "Bounds"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


class LowerBoundViolation(AssertionError):
    """A host below a proven lower bound arrowed: a bound or the engine is wrong."""


# -- structure helpers -------------------------------------------------------


def split_copies(g: Graph) -> tuple[int, Graph] | None:
    """``(s, g0)`` when ``g`` is ``s`` disjoint copies of one connected graph."""
    comps = components(g)
    if not comps:
        return None
    subs = [g.induced(c) for c in comps]
    key = canonical_key(subs[0])
    if all(len(c) == len(comps[0]) for c in comps) and all(canonical_key(s) == key for s in subs[1:]):
        return len(comps), subs[0]
    return None


def _is_path(g: Graph) -> int | None:
    """Order of ``g`` if it is a path, else None."""
    n = g.order
    if n >= 1 and is_connected(g) and g.num_edges == n - 1 and max(g.degrees(), default=0) <= 2:
        return n
    return None


def _is_matching(g: Graph) -> int | None:
    """Number of edges if ``g`` is a perfect matching tK2, else None."""
    sc = split_copies(g)
    if sc is not None and sc[1].order == 2 and sc[1].num_edges == 1:
        return sc[0]
    return None


# -- lower bounds ------------------------------------------------------------


def ir_lower(g: Graph, h: Graph) -> int:
    """Largest of the closed-form lower bounds that apply to ``(g, h)``."""
    if g.num_edges == 0 or h.num_edges == 0:
        return max(1, min(g.order, h.order))
    best = max(g.order, h.order)
    # IR(G, H) = IR(H, G), so each bound is applied in both orientations
    for a, b in ((g, h), (h, g)):
        if is_connected(a):
            best = max(best, gorgol_lower_bound(independence_number(a), clique_number(b)))
        if _is_matching(b) == 2 and not has_isolated_vertex(a):
            best = max(best, a.order + 2)
    return best


# -- constructions -----------------------------------------------------------


@dataclass
class Construction:
    order: int
    host: Graph
    description: str
    stats: SearchStats | None = None


def _path_matching_host(n: int, t: int) -> tuple[Graph, int] | None:
    """Disjoint cycles (plus P_n when t is odd) for (P_n, tK2).

    The cycle is C_{n+2}, except C_7 for P_4.
    """
    if t < 2 or n < 4:
        return None
    parts = [cycle(max(n + 2, 7))] * (t // 2) + ([path(n)] if t % 2 else [])
    host = disjoint_union(*parts)
    if n == 4:
        formula = 7 * (t // 2) + 4 * (t % 2)
    else:
        formula = -(-t // 2) * n + t - t % 2
    if host.order != formula:
        raise AssertionError(f"construction order {host.order} differs from formula {formula}")
    return host, formula


def _base_host(g0: Graph, h0: Graph, cap: int, budget: int) -> Graph | None:
    if g0.order == 2 and g0.num_edges == 1:
        return h0
    if h0.order == 2 and h0.num_edges == 1:
        return g0
    if ir_lower(g0, h0) > cap:
        return None
    res = ir_exact(g0, h0, order_cap=cap, budget=budget, use_constructions=False)
    return res.arrow_host if res.status is Status.EXACT else None


def construction_candidates(g: Graph, h: Graph, *, base_cap: int = 7, budget: int = DEFAULT_BUDGET) -> list[Construction]:
    """Unconfirmed candidate hosts, smallest first."""
    out: list[Construction] = []
    sg, sh = split_copies(g), split_copies(h)
    if sg is not None and sh is not None and sg[0] + sh[0] > 2:
        (s, g0), (t, h0) = sg, sh
        base = _base_host(g0, h0, base_cap, budget)
        if base is not None:
            host = copies(s + t - 1, base)
            out.append(Construction(host.order, host, f"{s + t - 1} disjoint copies of a host arrowing the base pair"))
    # one side connected, the other a union of distinct parts: union of per-part hosts
    for a, b, swap in ((g, h, False), (h, g, True)):
        if is_connected(a) and not is_connected(b) and split_copies(b) is None:
            parts = [b.induced(c) for c in components(b)]
            bases = [_base_host(p, a, base_cap, budget) if swap else _base_host(a, p, base_cap, budget) for p in parts]
            if all(x is not None for x in bases):
                host = disjoint_union(*bases)  # type: ignore[arg-type]
                out.append(Construction(host.order, host, "disjoint union of hosts arrowing each component"))
    n, t = _is_path(g), _is_matching(h)
    if n is not None and t is not None:
        built = _path_matching_host(n, t)
        if built is not None:
            host, order = built
            out.append(Construction(order, host, f"{t // 2 if t > 3 else ''}C{max(n + 2, 7)}" + (f"+P{n}" if t % 2 else "")))
    if sg is not None and _is_matching(h) == 2:
        s, g0 = sg
        n = _is_path(g0)
        if n is not None and n >= 4 and 2 <= s <= n - 1:
            host = cycle(s * n + s + 1)
            out.append(Construction(host.order, host, f"C{host.order}, containing sP{n} as an induced subgraph"))
    out.sort(key=lambda c: c.order)
    return out


def ir_upper_by_construction(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET, *, base_cap: int = 7) -> Construction | None:
    """Smallest construction host confirmed to arrow ``(g, h)``, or None."""
    for cand in construction_candidates(g, h, base_cap=base_cap, budget=budget):
        verdict = decide_arrowing(cand.host, g, h, budget)
        if verdict.outcome is Outcome.ARROWS:
            cand.stats = verdict.stats
            return cand
        if verdict.outcome is Outcome.NOT_ARROWS:
            raise AssertionError(f"construction {cand.description} does not arrow")
    return None


# -- sweeps ------------------------------------------------------------------

_HOSTS: dict[tuple[int, bool], list[Graph]] = {}


def hosts_of_order(n: int, connected_only: bool = False) -> list[Graph]:
    """All graphs of order ``n`` (one per class), densest first.  Cached."""
    key = (n, connected_only)
    if key not in _HOSTS:
        gs = list(generate(n, GenFilter(connected_only=connected_only)))
        gs.sort(key=lambda x: -x.num_edges)
        _HOSTS[key] = gs
    return _HOSTS[key]


def clear_caches() -> None:
    _HOSTS.clear()
    _RESULTS.clear()


@dataclass
class SweepRecord:
    order: int
    kind: str  # "all" or "connected"
    hosts: int = 0  # hosts examined
    total: int = 0  # hosts of this order and kind
    not_arrows: list[tuple[Graph, EdgeColoring]] = field(default_factory=list)
    unknown: list[Graph] = field(default_factory=list)
    arrow_host: Graph | None = None
    arrow_stats: SearchStats | None = None
    nodes: int = 0

    @property
    def complete_not_arrowing(self) -> bool:
        return self.arrow_host is None and not self.unknown and self.hosts == self.total

    def summary(self) -> dict:
        return {
            "order": self.order,
            "kind": self.kind,
            "hosts_total": self.total,
            "hosts_examined": self.hosts,
            "not_arrowing": len(self.not_arrows),
            "unknown": [encode(x) for x in self.unknown],
            "arrowing_host": encode(self.arrow_host) if self.arrow_host is not None else None,
            "nodes": self.nodes,
        }


def _decide_task(args: tuple[str, str, str, int]) -> tuple[str, list[int] | None, dict]:
    host6, g6, h6, budget = args
    v = decide_arrowing(decode(host6), decode(g6), decode(h6), budget)
    return str(v.outcome), list(v.witness.colours) if v.witness else None, v.stats.as_dict()


def _verdicts(hosts: list[Graph], g: Graph, h: Graph, budget: int, jobs: int) -> Iterator[tuple[Graph, str, EdgeColoring | None, SearchStats]]:
    if jobs <= 1 or len(hosts) < 64:
        for host in hosts:
            v = decide_arrowing(host, g, h, budget)
            yield host, str(v.outcome), v.witness, v.stats
        return
    g6, h6 = encode(g), encode(h)
    tasks = [(encode(x), g6, h6, budget) for x in hosts]
    chunk = max(1, len(tasks) // (jobs * 16))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = pool.map(_decide_task, tasks, chunksize=chunk)
        try:
            for host, (outcome, colours, st) in zip(hosts, results):
                stats = SearchStats(st["nodes"], st["red_copies"], st["blue_copies"], st["budget"], st["backend"], st["seconds"])
                wit = EdgeColoring(host, tuple(colours)) if colours is not None else None
                yield host, outcome, wit, stats
        finally:
            pool.shutdown(wait=True, cancel_futures=True)


def sweep_order(
    n: int,
    g: Graph,
    h: Graph,
    *,
    budget: int = DEFAULT_BUDGET,
    connected_only: bool = False,
    jobs: int = 1,
    stop_on_arrow: bool = True,
) -> SweepRecord:
    hosts = hosts_of_order(n, connected_only)
    rec = SweepRecord(order=n, kind="connected" if connected_only else "all", total=len(hosts))
    for host, outcome, witness, stats in _verdicts(hosts, g, h, budget, jobs):
        rec.hosts += 1
        rec.nodes += stats.nodes
        if outcome == str(Outcome.NOT_ARROWS):
            assert witness is not None
            rec.not_arrows.append((host, witness))
        elif outcome == str(Outcome.UNKNOWN):
            rec.unknown.append(host)
        else:
            if rec.arrow_host is None:
                rec.arrow_host = host
                rec.arrow_stats = stats
            if stop_on_arrow:
                break
    log.info("order %d (%s): %d/%d hosts, arrow=%s, unknown=%d", n, rec.kind, rec.hosts, rec.total,
             rec.arrow_host is not None, len(rec.unknown))
    return rec


# -- results -----------------------------------------------------------------


@dataclass
class IRResult:
    red: Graph
    blue: Graph
    lo: int
    hi: int | None
    status: Status
    arrow_host: Graph | None = None
    arrow_stats: SearchStats | None = None
    arrow_source: str = ""
    sweeps: list[SweepRecord] = field(default_factory=list)
    manifest_kind: str = "all"
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def value(self) -> int | None:
        return self.lo if self.status is Status.EXACT else None

    def witnesses_at(self, order: int) -> list[tuple[Graph, EdgeColoring]]:
        out = []
        for s in self.sweeps:
            if s.order == order:
                out.extend(s.not_arrows)
        return out

    def summary(self, timing: bool = True) -> dict:
        d = {
            "red": encode(self.red),
            "blue": encode(self.blue),
            "status": str(self.status),
            "value": self.value,
            "interval": [self.lo, self.hi],
            "arrow_host": encode(self.arrow_host) if self.arrow_host is not None else None,
            "arrow_source": self.arrow_source,
            "arrow_stats": self.arrow_stats.as_dict(timing) if self.arrow_stats else None,
            "manifest_kind": self.manifest_kind,
            "sweeps": [s.summary() for s in self.sweeps],
            "notes": list(self.notes),
        }
        return d


_RESULTS: dict[tuple, IRResult] = {}


def ir_exact(
    g: Graph,
    h: Graph,
    order_cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
    *,
    jobs: int = 1,
    use_constructions: bool = True,
) -> IRResult:
    """IR(g, h) by an order sweep from just below the proven lower bound.

    The sweep starts one order below ``ir_lower`` so the result always
    carries good colourings for every host one order short of the value.
    """
    if order_cap > MAX_GENERATE_ORDER:
        raise ValueError(f"order_cap above the enumeration ceiling {MAX_GENERATE_ORDER}")
    key = ("exact", g.adj, h.adj, order_cap, budget, use_constructions)
    if key in _RESULTS:
        return _RESULTS[key]
    lower = ir_lower(g, h)
    cons = ir_upper_by_construction(g, h, budget) if use_constructions else None
    lo = lower
    tainted_from: int | None = None
    sweeps: list[SweepRecord] = []
    result = None
    for n in range(max(1, lower - 1), order_cap + 1):
        if cons is not None and cons.order == n:
            if n < lower:
                raise LowerBoundViolation(f"construction of order {n} is below the lower bound {lower}")
            lo_final = tainted_from if tainted_from is not None else n
            status = Status.EXACT if tainted_from is None else Status.BOUNDS
            result = IRResult(g, h, min(lo_final, n), n, status, cons.host, cons.stats,
                              f"construction: {cons.description}", sweeps)
            break
        rec = sweep_order(n, g, h, budget=budget, jobs=jobs)
        sweeps.append(rec)
        if rec.arrow_host is not None:
            if n < lower:
                raise LowerBoundViolation(f"order {n} host arrows but the lower bound is {lower}")
            if tainted_from is None:
                result = IRResult(g, h, n, n, Status.EXACT, rec.arrow_host, rec.arrow_stats, "sweep", sweeps)
            else:
                result = IRResult(g, h, tainted_from, n, Status.BOUNDS, rec.arrow_host, rec.arrow_stats, "sweep", sweeps)
            break
        if rec.unknown:
            if tainted_from is None:
                tainted_from = max(n, lower)
        elif tainted_from is None:
            lo = max(lo, n + 1)
    if result is None:
        lo_final = tainted_from if tainted_from is not None else lo
        hi = cons.order if cons is not None else None
        if hi is not None and hi < lo_final:
            raise LowerBoundViolation("construction below the swept lower bound")
        arrow_host = cons.host if cons is not None else None
        below_clean = any(s.order == lo_final - 1 and s.complete_not_arrowing for s in sweeps)
        if hi is not None and hi == lo_final and tainted_from is None and below_clean:
            status = Status.EXACT
        else:
            status = Status.BOUNDS if hi is not None else Status.UNKNOWN
        result = IRResult(g, h, lo_final, hi, status, arrow_host, cons.stats if cons else None,
                          f"construction: {cons.description}" if cons else "", sweeps)
        if status is not Status.EXACT:
            result.notes.append(f"order cap {order_cap} reached")
    _RESULTS[key] = result
    return result


def _partitions(t: int, max_part: int | None = None) -> Iterator[list[int]]:
    """Integer partitions of ``t`` in non-increasing order."""
    if max_part is None:
        max_part = t
    if t == 0:
        yield []
        return
    for first in range(min(t, max_part), 0, -1):
        for rest in _partitions(t - first, first):
            yield [first] + rest


def ir_exact_multicopy(
    g: Graph,
    h_base: Graph,
    t: int,
    order_cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
    *,
    jobs: int = 1,
) -> IRResult:
    """IR(g, t*h_base) using smaller multiplicities.

    Write f_i = IR(g, i*h_base).  A disjoint union of minimal hosts for
    i_1 + ... + i_m = t arrows the pair, so f_t <= D = min sum f_{i_j}.  A
    minimal host of order below D must be connected, so only connected
    hosts are swept below D.
    """
    if t < 1:
        raise ValueError("t must be positive")
    h = copies(t, h_base)
    if t == 1:
        return ir_exact(g, h, order_cap, budget, jobs=jobs)
    if not (is_connected(g) and is_connected(h_base)):
        return ir_exact(g, h, order_cap, budget, jobs=jobs)
    key = ("multi", g.adj, h_base.adj, t, order_cap, budget)
    if key in _RESULTS:
        return _RESULTS[key]
    smaller = {i: ir_exact_multicopy(g, h_base, i, order_cap, budget, jobs=jobs) for i in range(1, t)}
    best_sum, best_parts = None, None
    for parts in _partitions(t):
        if len(parts) < 2:
            continue
        his = [smaller[p].hi for p in parts]
        if any(x is None for x in his):
            continue
        total = sum(his)  # type: ignore[arg-type]
        if best_sum is None or total < best_sum:
            best_sum, best_parts = total, parts
    exact_parts = best_parts is not None and all(smaller[p].status is Status.EXACT for p in best_parts)
    lower = ir_lower(g, h)
    sweeps: list[SweepRecord] = []
    top = order_cap if best_sum is None else min(order_cap, best_sum - 1)
    tainted_from = None
    result = None
    for n in range(max(1, lower - 1), top + 1):
        rec = sweep_order(n, g, h, budget=budget, connected_only=True, jobs=jobs)
        sweeps.append(rec)
        if rec.arrow_host is not None:
            if n < lower:
                raise LowerBoundViolation(f"order {n} host arrows but the lower bound is {lower}")
            lo = tainted_from if tainted_from is not None else n
            status = Status.EXACT if tainted_from is None else Status.BOUNDS
            result = IRResult(g, h, lo, n, status, rec.arrow_host, rec.arrow_stats, "connected sweep", sweeps,
                              manifest_kind="connected")
            break
        if rec.unknown and tainted_from is None:
            tainted_from = max(n, lower)
    if result is None and best_sum is not None and top == best_sum - 1:
        assert best_parts is not None
        union = disjoint_union(*(smaller[p].arrow_host for p in best_parts))  # type: ignore[misc]
        verdict = decide_arrowing(union, g, h, budget)
        if verdict.outcome is Outcome.NOT_ARROWS:
            raise AssertionError("disjoint union of arrowing hosts failed to arrow")
        confirmed = verdict.outcome is Outcome.ARROWS
        exact = confirmed and exact_parts and tainted_from is None
        lo = best_sum if exact else (tainted_from if tainted_from is not None else max(lower, top + 1))
        result = IRResult(g, h, min(lo, best_sum), best_sum, Status.EXACT if exact else Status.BOUNDS, union,
                          verdict.stats, f"union over parts {best_parts}", sweeps, manifest_kind="connected")
    if result is None:
        lo = tainted_from if tainted_from is not None else max(lower, top + 1)
        result = IRResult(g, h, lo, best_sum, Status.BOUNDS, None, None, "", sweeps, manifest_kind="connected")
        result.notes.append(f"order cap {order_cap} reached")
    _RESULTS[key] = result
    return result


# -- certificate bundles -----------------------------------------------------


def _canonical_witness(host: Graph, coloring: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    lab, _ = canonical_labeling(host)
    perm = [0] * host.order
    for i, v in enumerate(lab):
        perm[v] = i
    chost = host.relabel(perm)
    mapping = {(perm[u], perm[v]): c for (u, v), c in zip(host.edges(), coloring.colours)}
    return chost, EdgeColoring.from_mapping(chost, mapping)


def write_bundle(result: IRResult, directory: str | os.PathLike, *, timing: bool = True) -> Path:
    """Write ``result.json``, ``arrow.txt`` and one witness file per non-arrowing host."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    manifest = []
    for rec in result.sweeps:
        sub = root / "witnesses" / f"order{rec.order}"
        sub.mkdir(parents=True, exist_ok=True)
        files = []
        for host, col in rec.not_arrows:
            chost, ccol = _canonical_witness(host, col)
            name = encode(chost)
            (sub / f"{name}.col").write_text(ccol.to_text(), encoding="ascii")
            files.append(f"{name}.col")
        manifest.append({"order": rec.order, "kind": rec.kind, "complete": rec.complete_not_arrowing,
                         "count": len(files), "files": sorted(files)})
    if result.arrow_host is not None:
        (root / "arrow.txt").write_text(f"c {encode(result.arrow_host)}\n", encoding="ascii")
    payload = result.summary(timing)
    payload["manifest"] = manifest
    (root / "result.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return root


@dataclass
class CertifyReport:
    ok: bool
    witnesses: int
    problems: list[str]


def certify_bundle(directory: str | os.PathLike, budget: int = DEFAULT_BUDGET) -> CertifyReport:
    """Re-check a bundle: witnesses are good, pairwise non-isomorphic, and complete."""
    root = Path(directory)
    problems: list[str] = []
    try:
        payload = json.loads((root / "result.json").read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        return CertifyReport(False, 0, [f"cannot read result.json: {exc}"])
    g, h = decode(payload["red"]), decode(payload["blue"])
    checked = 0
    for entry in payload.get("manifest", []):
        order, kind = entry["order"], entry["kind"]
        keys = set()
        for fname in entry["files"]:
            path_ = root / "witnesses" / f"order{order}" / fname
            try:
                col = EdgeColoring.from_text(path_.read_text(encoding="ascii"))
            except (OSError, ValueError) as exc:
                problems.append(f"{fname}: {exc}")
                continue
            checked += 1
            if col.host.order != order:
                problems.append(f"{fname}: host has order {col.host.order}, expected {order}")
            bad = verify_coloring(col.host, col, g, h)
            if bad is not None:
                problems.append(f"{fname}: {bad.colour} copy at {bad.embedding}")
            k = canonical_key(col.host)
            if k in keys:
                problems.append(f"{fname}: duplicate isomorphism class")
            keys.add(k)
        if entry.get("complete"):
            expected = count(order, GenFilter(connected_only=(kind == "connected")))
            if len(entry["files"]) != expected:
                problems.append(f"order {order}: {len(entry['files'])} witnesses, {expected} classes exist")
    if payload.get("status") == str(Status.EXACT):
        value = payload["value"]
        below = [e for e in payload.get("manifest", []) if e["order"] == value - 1]
        if value > 1 and not (below and below[0].get("complete")):
            problems.append(f"exact value {value} lacks a complete order-{value - 1} manifest")
        arrow = root / "arrow.txt"
        if not arrow.exists():
            problems.append("exact result without arrow.txt")
        else:
            host = decode(arrow.read_text(encoding="ascii").split()[1])
            if host.order != value:
                problems.append(f"arrowing host has order {host.order}, value is {value}")
            v = decide_arrowing(host, g, h, budget)
            if v.outcome is not Outcome.ARROWS:
                problems.append(f"arrowing host re-check gave {v.outcome}")
    return CertifyReport(not problems, checked, problems)


__all__ = [
    "Construction",
    "IRResult",
    "LowerBoundViolation",
    "Status",
    "SweepRecord",
    "certify_bundle",
    "clear_caches",
    "construction_candidates",
    "hosts_of_order",
    "ir_exact",
    "ir_exact_multicopy",
    "ir_lower",
    "ir_upper_by_construction",
    "split_copies",
    "sweep_order",
    "write_bundle",
]

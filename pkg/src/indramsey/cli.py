"""Command-line interface.

Exit codes: 0 success (or decided as expected), 2 decided differently or
invalid certificate, 3 undecided within budget / cap, 4 usage error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import graph6
from .arrow import DEFAULT_BUDGET, Outcome, decide_arrowing, decide_weak_arrowing
from .claims import FULL, QUICK, verify_all
from .embed import enumerate_induced, find_induced
from .expr import ExprError, parse_graph
from .generate import MAX_GENERATE_ORDER, GenFilter, generate
from .ramsey import DEFAULT_CAP, Status, certify_bundle, ir_exact, write_bundle
from .strategies import StrategyError, avoid_2k2_coloring, chromatic_partition_coloring, triangle_coloring

EXIT_OK, EXIT_DIFFERENT, EXIT_UNKNOWN, EXIT_USAGE = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _graph(text: str, what: str):
    try:
        return parse_graph(text)
    except (ExprError, ValueError) as exc:
        raise UsageError(f"--{what}: {exc}") from None


def _jobs(n: int | None) -> int:
    return n if n is not None else (os.cpu_count() or 1)


def cmd_arrows(args) -> int:
    host, g, h = _graph(args.host, "host"), _graph(args.red, "red"), _graph(args.blue, "blue")
    decide = decide_weak_arrowing if args.weak else decide_arrowing
    v = decide(host, g, h, args.budget)
    st = v.stats
    print(f"{v.outcome}  nodes={st.nodes} red_copies={st.red_copies} blue_copies={st.blue_copies} "
          f"backend={st.backend} seconds={st.seconds:.3f}")
    if v.witness is not None:
        if args.witness:
            Path(args.witness).write_text(v.witness.to_text(), encoding="ascii")
        else:
            sys.stdout.write(v.witness.to_text())
    if v.outcome is Outcome.UNKNOWN:
        return EXIT_UNKNOWN
    if args.expect is not None:
        return EXIT_OK if v.arrows == (args.expect == "arrows") else EXIT_DIFFERENT
    return EXIT_OK


def cmd_ir(args) -> int:
    g, h = _graph(args.red, "red"), _graph(args.blue, "blue")
    if args.cap > MAX_GENERATE_ORDER:
        raise UsageError(f"--cap may not exceed {MAX_GENERATE_ORDER}")
    res = ir_exact(g, h, args.cap, args.budget, jobs=_jobs(args.jobs))
    if res.status is Status.EXACT:
        print(f"IR = {res.value}  ({res.arrow_source})")
    else:
        hi = "?" if res.hi is None else res.hi
        print(f"{res.status}: {res.lo} <= IR <= {hi}")
    for s in res.sweeps:
        verdict = "arrowing host found" if s.arrow_host is not None else f"{len(s.not_arrows)} good colourings"
        extra = f", {len(s.unknown)} undecided" if s.unknown else ""
        print(f"  order {s.order}: {s.hosts}/{s.total} hosts, {verdict}{extra}")
    if args.out:
        write_bundle(res, args.out)
        print(f"certificate bundle written to {args.out}")
    if res.status is not Status.EXACT:
        return EXIT_UNKNOWN
    if args.expect is not None and res.value != args.expect:
        return EXIT_DIFFERENT
    return EXIT_OK


def cmd_gen(args) -> int:
    if not 0 <= args.order <= MAX_GENERATE_ORDER:
        raise UsageError(f"order must be between 0 and {MAX_GENERATE_ORDER}")
    filt = GenFilter(connected_only=args.connected, min_edges=args.min_edges, max_edges=args.max_edges)
    n = 0
    out = sys.stdout
    for g in generate(args.order, filt):
        n += 1
        if not args.count:
            out.write(graph6.encode(g) + "\n")
    if args.count:
        print(n)
    return EXIT_OK


def cmd_embed(args) -> int:
    pattern = _graph(args.pattern, "pattern")
    if args.host is not None:
        host = _graph(args.host, "host")
        if args.all:
            found = 0
            for emb in enumerate_induced(host, pattern, distinct_sets=True):
                found += 1
                print(" ".join(f"{k}->{v}" for k, v in sorted(emb.items())))
            print(f"{found} induced copies")
            return EXIT_OK
        emb = find_induced(host, pattern)
        print("not found" if emb is None else " ".join(f"{k}->{v}" for k, v in sorted(emb.items())))
        return EXIT_OK
    # filter graph6 lines from stdin
    for lineno, line in enumerate(sys.stdin, 1):
        line = line.strip()
        if not line:
            continue
        try:
            host = graph6.decode(line)
        except graph6.Graph6Error as exc:
            raise UsageError(f"stdin line {lineno}: {exc}") from None
        if (find_induced(host, pattern) is not None) != args.invert:
            print(line)
    return EXIT_OK


def cmd_strategy(args) -> int:
    host = _graph(args.host, "host")
    try:
        if args.name == "avoid-2k2":
            if args.red is None:
                raise UsageError("avoid-2k2 needs --red")
            col = avoid_2k2_coloring(host, _graph(args.red, "red"))
        elif args.name == "triangle":
            col = triangle_coloring(host, args.t)
        else:
            if args.red is None:
                raise UsageError("chromatic needs --red")
            col = chromatic_partition_coloring(host, _graph(args.red, "red"), args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except StrategyError as exc:
        print(f"strategy failed: {exc}", file=sys.stderr)
        return EXIT_DIFFERENT
    if col is None:
        print("no colouring: the strategy's precondition pattern does not occur", file=sys.stderr)
        return EXIT_DIFFERENT
    text = col.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    def progress(e):
        if args.verbose:
            print(f"{e.key}: {e.status} ({e.seconds:.1f}s)", file=sys.stderr)

    report = verify_all(args.profile, args.budget, jobs=_jobs(args.jobs), seed=args.seed, progress=progress)
    text = report.to_text()
    sys.stdout.write(text)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.txt").write_text(text, encoding="utf-8")
        (out / "report.json").write_text(report.to_json(), encoding="utf-8")
    return EXIT_OK if report.ok else EXIT_DIFFERENT


def cmd_certify(args) -> int:
    rep = certify_bundle(args.bundle, args.budget)
    if rep.ok:
        print(f"OK, {rep.witnesses} witnesses validated")
        return EXIT_OK
    for p in rep.problems:
        print(p)
    print(f"INVALID: {len(rep.problems)} problems")
    return EXIT_DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="indramsey", description="Induced Ramsey numbers of small graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("arrows", help="does HOST strongly arrow (RED, BLUE)?")
    a.add_argument("--host", required=True)
    a.add_argument("--red", required=True)
    a.add_argument("--blue", required=True)
    a.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    a.add_argument("--weak", action="store_true", help="copies need not be induced")
    a.add_argument("--witness", help="write the good colouring here instead of stdout")
    a.add_argument("--expect", choices=("arrows", "not-arrows"))
    a.set_defaults(func=cmd_arrows)

    r = sub.add_parser("ir", help="compute IR(RED, BLUE)")
    r.add_argument("--red", required=True)
    r.add_argument("--blue", required=True)
    r.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest host order swept")
    r.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    r.add_argument("--out", help="certificate bundle directory")
    r.add_argument("--jobs", type=int)
    r.add_argument("--expect", type=int)
    r.set_defaults(func=cmd_ir)

    g = sub.add_parser("gen", help="graphs of a given order, one per isomorphism class, as graph6")
    g.add_argument("order", type=int)
    g.add_argument("--connected", action="store_true")
    g.add_argument("--min-edges", type=int, default=0)
    g.add_argument("--max-edges", type=int)
    g.add_argument("--count", action="store_true", help="print only the number of graphs")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("embed", help="find an induced copy of PATTERN")
    e.add_argument("--pattern", required=True)
    e.add_argument("--host", help="host expression; without it, graph6 hosts are read from stdin")
    e.add_argument("--all", action="store_true", help="list every copy (one per vertex set)")
    e.add_argument("--invert", action="store_true", help="with stdin: print hosts without the pattern")
    e.set_defaults(func=cmd_embed)

    s = sub.add_parser("strategy", help="build a good colouring with a named construction")
    s.add_argument("name", choices=("avoid-2k2", "triangle", "chromatic"))
    s.add_argument("--host", required=True)
    s.add_argument("--red", help="red pattern (avoid-2k2, chromatic)")
    s.add_argument("--t", type=int, default=1, help="number of triangles (triangle)")
    s.add_argument("--k", type=int, default=3, help="chromatic number of the blue pattern (chromatic)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_strategy)

    v = sub.add_parser("verify-paper", help="check the table of published results")
    v.add_argument("--profile", choices=(QUICK, FULL), default=QUICK)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--jobs", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", help="directory for report.txt and report.json")
    v.set_defaults(func=cmd_verify_paper)

    c = sub.add_parser("certify", help="re-validate a certificate bundle")
    c.add_argument("bundle")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(func=cmd_certify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"indramsey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, graph6.Graph6Error) as exc:
        print(f"indramsey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

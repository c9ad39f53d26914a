"""Command-line entry point: ``egcert check | extract | verify-theorems``.

Exit codes: 0 success, 2 unreadable or malformed input, 3 minimum degree
below 3 where witnesses were requested, 4 internal invariant violation (the
trace is dumped to stderr), 5 sweep failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Iterator

from .detect import cycle_spectrum, is_pk_free
from .enumeration import ALL_CHECKS, SweepConfig, sweep
from .graph import (
    CompleteGraph,
    Disconnected,
    Graph,
    ParseError,
    degree_stats,
    min_vertex_cut,
    parse_edgelist,
    parse_graph6,
)
from .theorem1 import p5_witness
from .theorem2 import eg_witness
from .witness import ExtractionTrace, InternalInvariant, MinDegree, Witness

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MIN_DEGREE = 3
EXIT_INVARIANT = 4
EXIT_SWEEP_FAILURES = 5

DEFAULT_MAX_CYCLE = 10


class InputError(Exception):
    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass
class CheckOutput:
    n: int
    m: int
    min_degree: int
    max_degree: int
    kappa: int | str
    p5_free: bool
    p8_free: bool
    spectrum_bound: int
    cycle_spectrum: list[int]
    witnesses: dict[str, dict] = field(default_factory=dict)
    traces: dict[str, dict] | None = None

    def to_json(self) -> str:
        d = asdict(self)
        if d["traces"] is None:
            del d["traces"]
        return json.dumps(d, sort_keys=True)

    def to_text(self, index: int) -> str:
        yes = {True: "yes", False: "no"}
        lengths = " ".join(map(str, self.cycle_spectrum)) or "-"
        lines = [
            f"graph {index}: n={self.n} m={self.m} min_degree={self.min_degree} "
            f"max_degree={self.max_degree} kappa={self.kappa}",
            f"  P5-free: {yes[self.p5_free]}  P8-free: {yes[self.p8_free]}",
            f"  cycle lengths up to {self.spectrum_bound}: {lengths}",
        ]
        for goal, w in self.witnesses.items():
            lines.append(f"  {goal} witness: {w['kind']} {' '.join(map(str, w['vertices']))}")
        for goal, t in (self.traces or {}).items():
            lines.append(f"  {goal} trace:")
            lines.extend("    " + _event_line(e) for e in t["events"])
        return "\n".join(lines)


def _event_line(e: dict) -> str:
    head = e["claim"] + (f" [{e['case']}]" if e["case"] else "")
    bound = " ".join(f"{k}={v}" for k, v in e["bind"].items())
    return f"{head} {bound}".rstrip()


def _kappa(g: Graph) -> int | str:
    try:
        return min_vertex_cut(g).kappa
    except CompleteGraph:
        return "complete"
    except Disconnected:
        return 0


def _extractors(goals):
    table = {"p5": p5_witness, "p8": eg_witness}
    return [(goal, table[goal]) for goal in goals]


def summarize(g: Graph, max_cycle: int, witnesses: bool = True,
              trace: bool = False) -> CheckOutput:
    """Build the CheckOutput for one graph.  Raises MinDegree / InternalInvariant."""
    stats = degree_stats(g)
    bound = min(max_cycle, g.n)
    out = CheckOutput(
        n=g.n, m=g.edge_count, min_degree=stats.min_deg, max_degree=stats.max_deg,
        kappa=_kappa(g), p5_free=is_pk_free(g, 5), p8_free=is_pk_free(g, 8),
        spectrum_bound=bound, cycle_spectrum=sorted(cycle_spectrum(g, bound)),
    )
    if witnesses:
        traces = {}
        for goal, fn in _extractors(("p5", "p8")):
            w, t = fn(g)
            out.witnesses[goal] = w.to_dict()
            traces[goal] = json.loads(t.to_json())
        if trace:
            out.traces = traces
    return out


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        return "edgelist" if len(line.split()) > 1 or line.isdigit() else "graph6"
    return "graph6"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        return fh.read()


def iter_graphs(text: str, fmt: str = "auto") -> Iterator[Graph | InputError]:
    """Yield each graph in ``text``; malformed records are yielded as InputError."""
    if fmt == "auto":
        fmt = _detect_format(text)
    if fmt == "edgelist":
        try:
            yield parse_edgelist(text)
        except (ParseError, ValueError) as exc:
            yield InputError(f"edge list: {exc}", 1)
        return
    index = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        index += 1
        try:
            yield parse_graph6(line.encode("ascii", errors="surrogateescape"))
        except ParseError as exc:
            yield InputError(f"line {lineno}: {exc}", index)


def _die_invariant(exc: InternalInvariant) -> int:
    print(f"internal invariant violated: {exc}", file=sys.stderr)
    if exc.trace is not None:
        print(exc.trace.to_json(), file=sys.stderr)
    return EXIT_INVARIANT


def cmd_check(args) -> int:
    try:
        text = _read_text(args.path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    status = EXIT_OK
    seen = 0
    for i, item in enumerate(iter_graphs(text, args.format), 1):
        seen += 1
        code = EXIT_OK
        if isinstance(item, InputError):
            print(f"error: graph {i}: {item}", file=sys.stderr)
            code = EXIT_PARSE
        else:
            try:
                out = summarize(item, args.max_cycle, witnesses=not args.no_witness,
                                trace=args.trace)
            except MinDegree as exc:
                print(f"error: graph {i}: {exc}", file=sys.stderr)
                code = EXIT_MIN_DEGREE
            except InternalInvariant as exc:
                code = _die_invariant(exc)
            else:
                print(out.to_json() if args.json else out.to_text(i))
        if status == EXIT_OK:
            status = code
    if not seen:
        print("error: no graph in input", file=sys.stderr)
        return EXIT_PARSE
    return status


def _extract_one(g: Graph, goal: str) -> tuple[Witness, ExtractionTrace]:
    fn = dict(_extractors((goal,)))[goal]
    return fn(g)


def cmd_extract(args) -> int:
    try:
        text = _read_text(args.path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    status = EXIT_OK
    seen = 0
    for i, item in enumerate(iter_graphs(text, args.format), 1):
        seen += 1
        code = EXIT_OK
        if isinstance(item, InputError):
            print(f"error: graph {i}: {item}", file=sys.stderr)
            code = EXIT_PARSE
        else:
            try:
                w, trace = _extract_one(item, args.goal)
            except MinDegree as exc:
                print(f"error: graph {i}: {exc}", file=sys.stderr)
                code = EXIT_MIN_DEGREE
            except InternalInvariant as exc:
                code = _die_invariant(exc)
            else:
                if args.json:
                    body = {"witness": w.to_dict()}
                    if args.trace:
                        body["trace"] = json.loads(trace.to_json())
                    print(json.dumps(body, sort_keys=True))
                else:
                    print(f"graph {i}: {w.kind.value} {' '.join(map(str, w.vertices))}")
                    if args.trace:
                        for e in trace.events:
                            print("  " + _event_line(e.to_dict()))
        if status == EXIT_OK:
            status = code
    if not seen:
        print("error: no graph in input", file=sys.stderr)
        return EXIT_PARSE
    return status


def cmd_verify_theorems(args) -> int:
    checks = frozenset(args.checks.split(",")) if args.checks else ALL_CHECKS
    try:
        if args.input is not None:
            text = _read_text(args.input)
            stream = tuple(line.strip().encode("ascii", errors="surrogateescape")
                           for line in text.splitlines() if line.strip())
            for lineno, rec in enumerate(stream, 1):
                try:
                    parse_graph6(rec)
                except ParseError as exc:
                    print(f"error: record {lineno}: {exc}", file=sys.stderr)
                    return EXIT_PARSE
            cfg = SweepConfig(n_min=args.n_min if args.n_min is not None else 0,
                              n_max=args.n_max if args.n_max is not None else 1 << 30,
                              min_degree=args.min_degree, source="graph6-stream",
                              stream=stream, checks=checks, parallelism=args.jobs)
        else:
            cfg = SweepConfig(n_min=args.n_min if args.n_min is not None else 4,
                              n_max=args.n_max if args.n_max is not None else 8,
                              min_degree=args.min_degree, checks=checks,
                              parallelism=args.jobs)
        report = sweep(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(report.to_json(timing=args.timing) if args.json else report.table())
    if report.failures:
        for f in report.failures:
            print(f"failure: {f['graph6']} {f['reason']}", file=sys.stderr)
        return EXIT_SWEEP_FAILURES
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="egcert",
                                description="Certified 4-cycle / 8-cycle / induced path witnesses.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="summarize graphs and extract both witnesses")
    c.add_argument("path", help="input file, or - for stdin")
    c.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    c.add_argument("--json", action="store_true", help="one JSON object per graph")
    c.add_argument("--trace", action="store_true", help="include extraction traces")
    c.add_argument("--no-witness", action="store_true",
                   help="skip extraction (allows graphs with minimum degree below 3)")
    c.add_argument("--max-cycle", type=int, default=DEFAULT_MAX_CYCLE,
                   help="longest cycle length in the reported spectrum")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("extract", help="extract one verified witness per graph")
    e.add_argument("path")
    e.add_argument("--goal", choices=("p5", "p8"), required=True)
    e.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    e.add_argument("--trace", action="store_true")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_extract)

    v = sub.add_parser("verify-theorems", help="exhaustive or stream-driven sweep")
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--min-degree", type=int, default=3)
    v.add_argument("--input", help="graph6 stream instead of internal generation (- for stdin)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--checks", help="comma-separated subset of: " + ",".join(sorted(ALL_CHECKS)))
    v.add_argument("--json", action="store_true")
    v.add_argument("--timing", action="store_true", help="add wall times to the JSON report")
    v.set_defaults(func=cmd_verify_theorems)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

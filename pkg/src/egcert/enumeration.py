"""Isomorph-free generation of small graphs and the exhaustive theorem sweep.

Canonical form: the lexicographically smallest graph6 bit string over all
vertex relabellings.  Because every prefix of a smallest string is itself the
smallest string of the subgraph on the first vertices, graphs can be built one
vertex (one bit-string column) at a time, discarding any prefix that is not
canonical.  Each isomorphism class is then produced exactly once.
"""

from __future__ import annotations

import hashlib
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .detect import (
    find_c4,
    find_cycle_of_length,
    is_cycle,
    is_pk_free,
    power_of_two_cycle,
    shortest_induced_cycle_at_least,
)
from .graph import Graph, bits, degree_stats, is_connected, parse_graph6, write_graph6
from .oracle import ORACLE_MAX_N, OrderTooLarge, brute_force_witness_exists
from .theorem1 import p5_witness
from .theorem2 import eg_witness
from .witness import WitnessKind, check_witness

__all__ = [
    "MAX_INTERNAL_ORDER",
    "OrderTooLarge",
    "canonical_form",
    "is_canonical",
    "generate_nonisomorphic",
    "SweepConfig",
    "SweepReport",
    "OrderStats",
    "check_graph",
    "sweep",
]

MAX_INTERNAL_ORDER = 9
ALL_CHECKS = frozenset({"theorem1", "theorem2", "lemma21", "oracle", "eg-conjecture-report"})


def _columns(adj: list[int] | tuple[int, ...], order: list[int]) -> list[int]:
    cols = []
    for j in range(1, len(order)):
        row = adj[order[j]]
        c = 0
        for i in range(j):
            c = c << 1 | (row >> order[i] & 1)
        cols.append(c)
    return cols


def _lexmin_search(adj, n: int, target: list[int] | None = None):
    """Level-wise search for the relabelling with the smallest column sequence.

    With ``target`` given, returns False as soon as some relabelling beats it
    (and True if none does); otherwise returns the best order found.
    """
    # twins are exchanged by an automorphism that fixes everything else
    twins = [0] * n
    for u in range(n):
        for w in range(u + 1, n):
            if adj[u] & ~(1 << w) == adj[w] & ~(1 << u):
                twins[u] |= 1 << w
                twins[w] |= 1 << u
    full = (1 << n) - 1
    # a partial is (order, placed mask, column value of every vertex so far)
    partials = [([v], 1 << v, [adj[w] >> v & 1 for w in range(n)]) for v in range(n)]
    for j in range(1, n):
        best = None
        chosen: list[tuple[list[int], int, list[int], int]] = []
        for order, placed, cv in partials:
            tried = 0
            free = full & ~placed
            while free:
                low = free & -free
                free ^= low
                w = low.bit_length() - 1
                if tried & twins[w]:
                    continue
                tried |= low
                col = cv[w]
                if best is None or col < best:
                    best = col
                    chosen = [(order, placed, cv, w)]
                elif col == best:
                    chosen.append((order, placed, cv, w))
        if target is not None and best < target[j - 1]:
            return False
        if j == n - 1:
            partials = [(order + [w], placed | 1 << w, cv) for order, placed, cv, w in chosen]
            break
        partials = []
        for order, placed, cv, w in chosen:
            row = adj[w]
            partials.append((order + [w], placed | 1 << w,
                             [c << 1 | (row >> x & 1) for x, c in enumerate(cv)]))
    if target is not None:
        return True
    return partials[0][0]


def canonical_form(g: Graph) -> tuple[Graph, list[int]]:
    """Canonically relabelled copy of g and the order used (new i = old order[i])."""
    if g.n <= 1:
        return g, list(range(g.n))
    order = _lexmin_search(g.adj, g.n)
    return g.relabel(order), order


def is_canonical(g: Graph) -> bool:
    return _is_canonical_adj(g.adj, g.n)


def _is_canonical_adj(adj, n: int) -> bool:
    if n <= 1:
        return True
    return _lexmin_search(adj, n, _columns(adj, list(range(n))))


def generate_nonisomorphic(n: int, min_degree: int = 3) -> Iterator[Graph]:
    """One graph per isomorphism class of connected n-vertex graphs with
    minimum degree >= ``min_degree``, each in canonical form, in canonical order."""
    if n > MAX_INTERNAL_ORDER:
        raise OrderTooLarge(f"internal generation stops at n={MAX_INTERNAL_ORDER}; "
                            "feed larger orders as a graph6 stream")
    if n <= 0:
        return iter(())
    found: list[Graph] = []

    def grow(adj: list[int], j: int) -> None:
        # vertices 0..j-1 placed; choose column j
        if j == n:
            g = Graph.from_adjacency(adj)
            if is_connected(g):
                found.append(g)
            return
        spare = n - 1 - j  # edges each existing vertex can still gain after this column
        must = 0
        for v in range(j):
            short = min_degree - adj[v].bit_count() - spare
            if short > 1:
                return
            if short == 1:
                must |= 1 << v
        for col in range(1 << j):
            if col & must != must:
                continue
            if col.bit_count() + spare < min_degree:
                continue
            new = list(adj) + [col]
            for v in bits(col):
                new[v] |= 1 << j
            if _is_canonical_adj(new, j + 1):
                grow(new, j + 1)

    grow([], 0)
    found.sort(key=lambda g: _columns(g.adj, list(range(g.n))))
    return iter(found)


# --- sweep --------------------------------------------------------------------

@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 4
    n_max: int = 8
    min_degree: int = 3
    source: str = "internal"
    stream: tuple[bytes, ...] = ()
    checks: frozenset[str] = ALL_CHECKS
    parallelism: int = 1

    def __post_init__(self):
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        if self.min_degree < 0:
            raise ValueError("min_degree must be non-negative")
        if self.source not in ("internal", "graph6-stream"):
            raise ValueError(f"unknown source {self.source!r}")
        unknown = set(self.checks) - ALL_CHECKS
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")


@dataclass
class OrderStats:
    graphs_total: int = 0
    graphs_connected_min_deg: int = 0
    p5_free_count: int = 0
    p8_free_count: int = 0
    c4_free_count: int = 0
    witnesses_by_kind: dict[str, Counter] = field(
        default_factory=lambda: {"theorem1": Counter(), "theorem2": Counter()})
    power_of_two: Counter = field(default_factory=Counter)
    failures: list[dict] = field(default_factory=list)
    witness_digest: str = ""
    wall_time: float = 0.0

    def to_dict(self, timing: bool) -> dict:
        d = {
            "graphs_total": self.graphs_total,
            "graphs_connected_min_deg": self.graphs_connected_min_deg,
            "p5_free_count": self.p5_free_count,
            "p8_free_count": self.p8_free_count,
            "c4_free_count": self.c4_free_count,
            "witnesses_by_kind": {k: dict(sorted(v.items()))
                                  for k, v in self.witnesses_by_kind.items()},
            "power_of_two_cycle": {str(k): v for k, v in sorted(self.power_of_two.items(),
                                                                key=lambda kv: str(kv[0]))},
            "failures": self.failures,
            "witness_digest": self.witness_digest,
        }
        if timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d


@dataclass
class SweepReport:
    per_order: dict[int, OrderStats] = field(default_factory=dict)

    @property
    def failures(self) -> list[dict]:
        return [f for s in self.per_order.values() for f in s.failures]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> str:
        """JSON report.  Without ``timing`` the output depends only on the inputs."""
        body = {"orders": {str(n): s.to_dict(timing) for n, s in sorted(self.per_order.items())},
                "failure_count": len(self.failures)}
        return json.dumps(body, sort_keys=True, indent=1)

    def table(self) -> str:
        head = (f"{'n':>3} {'graphs':>7} {'checked':>7} {'C4-free':>7} {'P5-free':>7} "
                f"{'P8-free':>7}  {'theorem1 kinds':<28} {'theorem2 kinds':<34} "
                f"{'fail':>4} {'time':>7}")
        lines = [head, "-" * len(head)]
        for n, s in sorted(self.per_order.items()):
            k1 = ",".join(f"{k}:{v}" for k, v in sorted(s.witnesses_by_kind["theorem1"].items()))
            k2 = ",".join(f"{k}:{v}" for k, v in sorted(s.witnesses_by_kind["theorem2"].items()))
            lines.append(f"{n:>3} {s.graphs_total:>7} {s.graphs_connected_min_deg:>7} "
                         f"{s.c4_free_count:>7} {s.p5_free_count:>7} {s.p8_free_count:>7}  "
                         f"{k1:<28} {k2:<34} {len(s.failures):>4} {s.wall_time:>6.1f}s")
        return "\n".join(lines)


def check_graph(g6: bytes, checks: frozenset[str] = ALL_CHECKS,
                min_degree: int = 3) -> dict:
    """Run every requested check on one graph; never raises."""
    out = {"g6": g6.decode(), "failures": []}
    fail = out["failures"].append
    try:
        g = parse_graph6(g6)
    except Exception as exc:  # noqa: BLE001 - recorded, not raised
        fail(f"parse: {exc}")
        return out
    stats = degree_stats(g)
    out["eligible"] = g.n > 0 and is_connected(g) and stats.min_deg >= min_degree
    if not out["eligible"] or stats.min_deg < 3:
        return out

    p5_free = is_pk_free(g, 5)
    p8_free = is_pk_free(g, 8)
    c4 = find_c4(g)
    out.update(p5_free=p5_free, p8_free=p8_free, c4_free=c4 is None)
    digest = hashlib.sha256()

    if checks & {"theorem2", "eg-conjecture-report"}:
        try:
            w, trace = eg_witness(g)
            out["theorem2"] = w.kind.value
            digest.update(json.dumps(w.to_dict()).encode() + trace.to_json().encode())
            reason = check_witness(g, w)
            if reason:
                fail(f"theorem2: witness rejected ({reason})")
            if p8_free and not w.kind.is_cycle:
                fail("theorem2: P8-free graph without a 4- or 8-cycle witness")
            if w.kind is WitnessKind.INDUCED_P8 and p8_free:
                fail("contrapositive: InducedP8 emitted for a P8-free graph")
            if trace.replay(g):
                fail("theorem2: trace replay failed")
        except Exception as exc:  # noqa: BLE001
            fail(f"theorem2: {type(exc).__name__}: {exc}")

    if "theorem1" in checks:
        try:
            w, trace = p5_witness(g)
            out["theorem1"] = w.kind.value
            digest.update(json.dumps(w.to_dict()).encode() + trace.to_json().encode())
            reason = check_witness(g, w)
            if reason:
                fail(f"theorem1: witness rejected ({reason})")
            if p5_free and w.kind is not WitnessKind.CYCLE4:
                fail("theorem1: P5-free graph without a 4-cycle witness")
            if w.kind is WitnessKind.INDUCED_P5 and p5_free:
                fail("contrapositive: InducedP5 emitted for a P5-free graph")
            if trace.replay(g):
                fail("theorem1: trace replay failed")
        except Exception as exc:  # noqa: BLE001
            fail(f"theorem1: {type(exc).__name__}: {exc}")

    if "lemma21" in checks and c4 is None:
        cyc = shortest_induced_cycle_at_least(g, 5)
        if cyc is None or len(cyc) < 5 or not is_cycle(g, cyc, induced=True):
            fail("lemma21: C4-free graph without an induced cycle of length >= 5")

    if "oracle" in checks and g.n <= ORACLE_MAX_N:
        verdicts = {
            WitnessKind.CYCLE4: c4 is not None,
            WitnessKind.CYCLE8: find_cycle_of_length(g, 8) is not None,
            WitnessKind.INDUCED_P5: not p5_free,
            WitnessKind.INDUCED_P8: not p8_free,
        }
        for kind, got in verdicts.items():
            if brute_force_witness_exists(g, kind) != got:
                fail(f"oracle: detector disagrees on {kind.value}")

    if "eg-conjecture-report" in checks:
        hit = power_of_two_cycle(g)
        out["pow2"] = hit[0] if hit else None

    out["digest"] = digest.hexdigest()
    return out


def _check_star(args):
    return check_graph(*args)


def _batches(cfg: SweepConfig) -> Iterator[tuple[int, Iterable[bytes]]]:
    if cfg.source == "internal":
        for n in range(cfg.n_min, cfg.n_max + 1):
            yield n, (write_graph6(g) for g in generate_nonisomorphic(n, cfg.min_degree))
        return
    by_order: dict[int, list[bytes]] = {}
    for line in cfg.stream:
        line = line.strip()
        if line:
            g = parse_graph6(line)
            if cfg.n_min <= g.n <= cfg.n_max:
                by_order.setdefault(g.n, []).append(line)
    yield from sorted(by_order.items())


def sweep(cfg: SweepConfig) -> SweepReport:
    """Check every graph from the configured source.

    Results are merged in generation (or stream) order, so the report does
    not depend on ``cfg.parallelism``.
    """
    report = SweepReport()
    pool = ProcessPoolExecutor(max_workers=cfg.parallelism) if cfg.parallelism > 1 else None
    try:
        t0 = time.perf_counter()
        for n, graphs in _batches(cfg):
            s = report.per_order.setdefault(n, OrderStats())
            args = [(g6, cfg.checks, cfg.min_degree) for g6 in graphs]
            if pool is not None:
                chunk = max(1, len(args) // (4 * cfg.parallelism))
                results = list(pool.map(_check_star, args, chunksize=chunk))
            else:
                results = [_check_star(a) for a in args]
            _merge(s, results)
            t1 = time.perf_counter()
            s.wall_time += t1 - t0
            t0 = t1
    finally:
        if pool is not None:
            pool.shutdown()
    return report


def _merge(s: OrderStats, results: list[dict]) -> None:
    digest = hashlib.sha256()
    for res in results:
        s.graphs_total += 1
        for reason in res["failures"]:
            s.failures.append({"graph6": res["g6"], "reason": reason})
        if not res.get("eligible"):
            continue
        s.graphs_connected_min_deg += 1
        if "p5_free" not in res:
            continue
        s.p5_free_count += res["p5_free"]
        s.p8_free_count += res["p8_free"]
        s.c4_free_count += res["c4_free"]
        for key in ("theorem1", "theorem2"):
            if key in res:
                s.witnesses_by_kind[key][res[key]] += 1
        if "pow2" in res:
            s.power_of_two[res["pow2"] if res["pow2"] is not None else "none"] += 1
        digest.update(res["g6"].encode() + res["digest"].encode())
    s.witness_digest = digest.hexdigest()

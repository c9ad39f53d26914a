"""Witness types, the independent witness checker, and extraction plumbing."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import CutAnalysis, Graph, degree_stats, min_vertex_cut

__all__ = [
    "WitnessKind",
    "Witness",
    "TraceEvent",
    "ExtractionTrace",
    "MinDegree",
    "InternalInvariant",
    "check_witness",
    "verify_witness",
    "CycleReduction",
    "reduce_cycle",
    "cut_analysis_cnc",
]


class WitnessKind(str, enum.Enum):
    CYCLE4 = "Cycle4"
    CYCLE8 = "Cycle8"
    INDUCED_P8 = "InducedP8"
    INDUCED_P5 = "InducedP5"

    @property
    def size(self) -> int:
        return {"Cycle4": 4, "Cycle8": 8, "InducedP8": 8, "InducedP5": 5}[self.value]

    @property
    def is_cycle(self) -> bool:
        return self in (WitnessKind.CYCLE4, WitnessKind.CYCLE8)


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(WitnessKind(d["kind"]), tuple(d["vertices"]))


@dataclass
class TraceEvent:
    claim: str
    case: str
    bind: dict[str, int]
    facts: list[tuple[str, str, bool]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"claim": self.claim, "case": self.case, "bind": dict(self.bind),
                "facts": [[a, b, adj] for a, b, adj in self.facts]}


@dataclass
class ExtractionTrace:
    """Ordered log of proof steps: which claim/case ran and which vertices it bound.

    Each event also lists the adjacency facts (label, label, adjacent?) that
    were checked against the graph while the event was open, so a trace can be
    replayed against the graph independently of the extractor.
    """

    events: list[TraceEvent] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"events": [e.to_dict() for e in self.events]},
                          sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ExtractionTrace":
        data = json.loads(text)
        return cls([TraceEvent(e["claim"], e["case"], dict(e["bind"]),
                               [tuple(f) for f in e.get("facts", [])])
                    for e in data["events"]])

    def replay(self, g: Graph) -> list[str]:
        """Re-check every recorded fact; returns a list of problems (empty if valid)."""
        problems = []
        for i, ev in enumerate(self.events):
            for label, v in ev.bind.items():
                if not 0 <= v < g.n:
                    problems.append(f"event {i}: {label}={v} not a vertex")
            for a, b, adj in ev.facts:
                if a not in ev.bind or b not in ev.bind:
                    problems.append(f"event {i}: unbound label in fact {a},{b}")
                elif g.has_edge(ev.bind[a], ev.bind[b]) != adj:
                    rel = "~" if adj else "!~"
                    problems.append(f"event {i} ({ev.claim}/{ev.case}): {a} {rel} {b} fails")
        return problems


class MinDegree(ValueError):
    """The input violates the minimum-degree-3 precondition."""


class InternalInvariant(RuntimeError):
    """A state the underlying proof rules out was reached; always an implementation bug."""

    def __init__(self, message: str, trace: ExtractionTrace | None = None):
        super().__init__(message)
        self.trace = trace


def check_witness(g: Graph, w: Witness) -> str | None:
    """Return None if ``w`` is a valid certificate in ``g``, else a reason code.

    Deliberately naive: it rebuilds a dense adjacency matrix from the edge list
    and checks the definition pair by pair.
    """
    n = g.n
    matrix = [[False] * n for _ in range(n)]
    for u, v in g.edges():
        matrix[u][v] = matrix[v][u] = True
    vs = list(w.vertices)
    if len(vs) != w.kind.size:
        return "wrong-length"
    for v in vs:
        if not isinstance(v, int) or v < 0 or v >= n:
            return "vertex-out-of-range"
    if len(set(vs)) != len(vs):
        return "repeated-vertex"
    k = len(vs)
    if w.kind.is_cycle:
        for i in range(k):
            if not matrix[vs[i]][vs[(i + 1) % k]]:
                return "missing-cycle-edge"
        return None
    for i in range(k):
        for j in range(i + 1, k):
            if j == i + 1 and not matrix[vs[i]][vs[j]]:
                return "missing-path-edge"
            if j > i + 1 and matrix[vs[i]][vs[j]]:
                return "path-chord"
    return None


def verify_witness(g: Graph, w: Witness) -> bool:
    return check_witness(g, w) is None


class CycleReduction(NamedTuple):
    """Outcome of :func:`reduce_cycle`: either a 4-cycle was found or a chordless cycle."""

    found_c4: bool
    cycle: list[int]


def reduce_cycle(g: Graph, cycle) -> CycleReduction:
    """Split a cycle at chords until a 4-cycle appears or no chord is left.

    The chord with the smallest endpoint pair is used. Of the two cycles it
    creates, a 4-cycle is returned at once; otherwise the search continues in
    the shorter one, except that a triangle is never kept over a longer side.
    Ties go to the side containing the smaller vertex.
    """
    cyc = list(cycle)
    while True:
        k = len(cyc)
        if k == 4:
            return CycleReduction(True, cyc)
        chord = None
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if g.has_edge(cyc[i], cyc[j]):
                    pair = tuple(sorted((cyc[i], cyc[j])))
                    if chord is None or pair < chord[0]:
                        chord = (pair, i, j)
        if chord is None:
            return CycleReduction(False, cyc)
        _, i, j = chord
        left = cyc[i:j + 1]
        right = cyc[j:] + cyc[:i + 1]
        for side in (left, right):
            if len(side) == 4:
                return CycleReduction(True, side)
        sides = [s for s in (left, right) if len(s) > 3] or [left, right]
        sides.sort(key=lambda s: (len(s), min(s)))
        cyc = sides[0]


def check_min_degree(g: Graph, at_least: int = 3) -> None:
    stats = degree_stats(g)
    if g.n == 0 or stats.min_deg < at_least:
        raise MinDegree(f"minimum degree is {stats.min_deg}, need at least {at_least}")


def cut_analysis_cnc(g: Graph) -> CutAnalysis:
    """Minimum cut plus CNC map for a connected, non-complete graph with min degree >= 3."""
    check_min_degree(g)
    ca = min_vertex_cut(g)
    for x in sorted(ca.cut):
        for i, comp in enumerate(ca.components):
            if not any(g.has_edge(x, v) for v in comp):
                raise InternalInvariant(
                    f"cut vertex {x} has no neighbour in component {i}; cut is not minimum")
    return ca


# --- shared machinery for the proof-driven extractors ------------------------

class Found(Exception):
    """Raised inside an extractor to return a witness from arbitrarily deep in a proof."""

    def __init__(self, witness: Witness):
        super().__init__(witness.kind.value)
        self.witness = witness


class ProofState:
    """Vertex labels, adjacency checks and trace recording for one extraction.

    ``forbidden`` lists the cycle lengths the current proof context rules out;
    a forbidden adjacency that nevertheless holds is turned into one of those
    cycles and returned as the answer.
    """

    def __init__(self, g: Graph, trace: ExtractionTrace, forbidden=(4,)):
        self.g = g
        self.trace = trace
        self.lab: dict[str, int] = {}
        self.forbidden = tuple(sorted(forbidden))
        self.event: TraceEvent | None = None

    # labels and events
    def step(self, claim: str, case: str = "") -> None:
        self.event = TraceEvent(claim, case, dict(self.lab))
        self.trace.events.append(self.event)

    def bind(self, label: str, v: int) -> None:
        self.lab[label] = v
        self.event.bind[label] = v

    def reset(self, labels: dict[str, int], claim: str, case: str) -> None:
        self.lab = dict(labels)
        self.step(claim, case)

    def swap(self, a: str, b: str, why: str) -> None:
        self.lab[a], self.lab[b] = self.lab[b], self.lab[a]
        self.step(self.event.claim, f"{self.event.case}|swap {a}<->{b}: {why}")

    def __getitem__(self, label: str) -> int:
        return self.lab[label]

    def adj(self, a: str, b: str) -> bool:
        return self.g.has_edge(self.lab[a], self.lab[b])

    def note(self, a: str, b: str, adjacent: bool) -> None:
        self.event.facts.append((a, b, adjacent))

    def fail(self, message: str):
        raise InternalInvariant(message, self.trace)

    # neighbour selection
    def pick(self, src: str, new: list[str], avoid: list[str]) -> None:
        """Bind ``new`` to the smallest neighbours of ``src`` outside the ``avoid`` labels."""
        taken = {self.lab[a] for a in avoid} | {self.lab[src]}
        cands = [v for v in self.g.neighbors(self.lab[src]) if v not in taken]
        if len(cands) < len(new):
            self.fail(f"{src} has only {len(cands)} neighbours outside {avoid}")
        for label, v in zip(new, cands):
            self.bind(label, v)
            self.note(src, label, True)

    # witnesses
    def cycle(self, labels: str) -> Witness:
        vs = [self.lab[x] for x in labels.split()]
        k = len(vs)
        for i in range(k):
            if not self.g.has_edge(vs[i], vs[(i + 1) % k]):
                self.fail(f"claimed cycle {labels} misses edge "
                          f"{labels.split()[i]}-{labels.split()[(i + 1) % k]}")
        if len(set(vs)) != k:
            self.fail(f"claimed cycle {labels} repeats a vertex")
        return self._cycle_witness(vs)

    def _cycle_witness(self, vs: list[int]) -> Witness:
        if len(vs) == 4:
            return Witness(WitnessKind.CYCLE4, tuple(vs))
        if len(vs) == 8:
            return Witness(WitnessKind.CYCLE8, tuple(vs))
        red = reduce_cycle(self.g, vs)
        if red.found_c4:
            return Witness(WitnessKind.CYCLE4, tuple(red.cycle))
        self.fail(f"forbidden {len(vs)}-cycle reduces to chordless {len(red.cycle)}-cycle "
                  f"{red.cycle}, contradicting the choice of the shortest induced cycle")

    def found_cycle(self, labels: str):
        raise Found(self.cycle(labels))

    def path(self, labels: str, kind: WitnessKind) -> Witness:
        return Witness(kind, tuple(self.lab[x] for x in labels.split()))

    def _bound_cycle_through(self, a: int, b: int) -> list[int] | None:
        """Shortest forbidden-length cycle through edge ab using only labelled vertices."""
        pool = sorted(set(self.lab.values()))
        g = self.g
        for length in self.forbidden:
            stack = [(b, [a, b])]
            while stack:
                v, p = stack.pop()
                if len(p) == length:
                    if g.has_edge(v, a):
                        return p
                    continue
                for w in reversed(pool):
                    if w not in p and g.has_edge(v, w):
                        stack.append((w, p + [w]))
        return None

    def forbid(self, a: str, b: str, cycle: str | None = None) -> None:
        """Assert ``a`` is not adjacent to ``b``; if it is, return the implied cycle.

        With ``cycle`` given (a label sequence closing through edge ab) that exact
        cycle is returned.  Without it, a cycle of a forbidden length through ab
        is searched among the labelled vertices.
        """
        if cycle is not None:
            self._check_claimed_cycle(a, b, cycle)
        if not self.adj(a, b):
            self.note(a, b, False)
            return
        self.note(a, b, True)
        if cycle is not None:
            self.found_cycle(cycle)
        found = self._bound_cycle_through(self.lab[a], self.lab[b])
        if found is None:
            self.fail(f"{a}~{b} holds but no forbidden cycle through it was found")
        raise Found(self._cycle_witness(found))

    def _check_claimed_cycle(self, a: str, b: str, cycle: str) -> None:
        # every edge of the claimed cycle except ab must already be present
        labels = cycle.split()
        k = len(labels)
        pairs = [(labels[i], labels[(i + 1) % k]) for i in range(k)]
        if (a, b) not in pairs and (b, a) not in pairs:
            self.fail(f"claimed cycle {cycle} does not use edge {a}{b}")
        for x, y in pairs:
            if {x, y} != {a, b} and not self.adj(x, y):
                self.fail(f"claimed cycle {cycle} for {a}{b} uses non-edge {x}{y}")

    def choose_nonadjacent(self, first: str, second: str, target: str, cycle: str) -> None:
        """Make ``first`` a vertex not adjacent to ``target`` (swapping with ``second``).

        ``cycle`` is the cycle present when both are adjacent to ``target``.
        """
        if not self.adj(first, target):
            self.note(first, target, False)
            return
        if not self.adj(second, target):
            self.swap(first, second, f"{first} ~ {target}")
            self.note(first, target, False)
            return
        self.note(first, target, True)
        self.note(second, target, True)
        self.found_cycle(cycle)

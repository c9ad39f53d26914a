"""Certificate extraction for minimum-degree-3 graphs: a 4-cycle or an induced P5.

Follows the minimum-cut argument: after ruling out 4-cycles, take a minimum
cut S and classify each component D of G - S as a complete neighbourhood
component (CNC) of x in S when x sees all of D.  Each place where the argument
derives a contradiction becomes a returned 4-cycle or induced P5.
"""

from __future__ import annotations

from collections import deque

from .detect import find_c4
from .graph import Graph, components, induced_subgraph
from .witness import (
    ExtractionTrace,
    Found,
    InternalInvariant,
    ProofState,
    Witness,
    WitnessKind,
    check_min_degree,
    check_witness,
    cut_analysis_cnc,
)

__all__ = ["p5_witness"]

P5 = WitnessKind.INDUCED_P5


def p5_witness(g: Graph) -> tuple[Witness, ExtractionTrace]:
    """Return a verified Cycle4 or InducedP5 witness and the proof trace."""
    check_min_degree(g)
    comp = sorted(components(g)[0])
    if len(comp) == g.n:
        return _extract(g)
    sub, back = induced_subgraph(g, comp)
    w, trace = _extract(sub)
    for ev in trace.events:
        ev.bind = {k: back[v] for k, v in ev.bind.items()}
    return Witness(w.kind, tuple(back[v] for v in w.vertices)), trace


def _extract(g: Graph) -> tuple[Witness, ExtractionTrace]:
    trace = ExtractionTrace()
    try:
        _run(g, trace)
    except Found as hit:
        w = hit.witness
    else:
        raise InternalInvariant("extraction ended without a witness", trace)
    reason = check_witness(g, w)
    if reason is not None:
        raise InternalInvariant(f"extracted {w.kind.value} {w.vertices} fails: {reason}", trace)
    return w, trace


def _shortest_to_neighbour(g: Graph, comp: frozenset[int], start: int, x: int) -> list[int]:
    """BFS inside ``comp`` from ``start`` to the nearest neighbour of x (smallest index)."""
    parent = {start: None}
    layer = [start]
    while layer:
        hits = sorted(v for v in layer if g.has_edge(v, x))
        if hits:
            path = [hits[0]]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        nxt = []
        for v in sorted(layer):
            for w in g.neighbors(v):
                if w in comp and w not in parent:
                    parent[w] = v
                    nxt.append(w)
        layer = nxt
    raise InternalInvariant(f"no neighbour of {x} reachable from {start} in its component")


def _run(g: Graph, trace: ExtractionTrace) -> None:
    c4 = find_c4(g)
    if c4 is not None:
        raise Found(Witness(WitnessKind.CYCLE4, tuple(c4)))
    if g.is_complete():
        raise InternalInvariant("complete graph with min degree 3 slipped past the C4 check",
                                trace)
    st = ProofState(g, trace, forbidden=(4,))
    ca = cut_analysis_cnc(g)
    comps = ca.components
    cut = sorted(ca.cut)
    st.step("Claim1.i", f"|S|={len(cut)} c={ca.c}")
    for i, x in enumerate(cut):
        st.bind(f"s{i}", x)

    # (ii) each cut vertex has at most one non-CNC
    for x in cut:
        bad = ca.non_cncs_of(x)
        if len(bad) >= 2:
            _two_non_cncs(st, ca, x, bad[0], bad[1])

    # (viii) two non-adjacent cut vertices
    x = cut[0]
    d = ca.cncs_of(x)[0]
    u = min(comps[d])
    st.step("Claim1.viii", "")
    st.bind("x", x)
    st.bind("u", u)
    st.note("x", "u", True)
    if len(comps[d]) >= 3:
        _big_cnc(st, x, comps[d])
    in_s = [v for v in cut if g.has_edge(u, v)]
    if len(in_s) >= 3:
        pair = next(((a, b) for i, a in enumerate(in_s) for b in in_s[i + 1:]
                     if not g.has_edge(a, b)), None)
        if pair is None:
            a, b, c = in_s[:3]
            raise Found(Witness(WitnessKind.CYCLE4, (u, a, c, b)))
        st.step("Claim1.viii", "u has three neighbours in S")
        st.bind("x", pair[0])
        st.bind("y", pair[1])
        st.note("x", "y", False)
    else:
        if len(comps[d]) != 2:
            st.fail("CNC of size one whose vertex has at most two cut neighbours")
        v = max(comps[d])
        st.bind("v", v)
        st.note("u", "v", True)
        st.note("x", "v", True)
        others = [y for y in in_s if y != x]
        if not others:
            st.fail("u has no cut neighbour besides x")
        st.bind("y", others[0])
        st.note("u", "y", True)
        st.forbid("y", "x", "y u v x")

    x, y = st["x"], st["y"]
    common = [i for i in range(ca.c) if ca.cnc[(x, i)] and ca.cnc[(y, i)]]
    for i in common:
        if len(comps[i]) >= 2:
            a, b = sorted(comps[i])[:2]
            raise Found(Witness(WitnessKind.CYCLE4, (x, a, y, b)))
    if len(common) >= 2:
        a, b = min(comps[common[0]]), min(comps[common[1]])
        raise Found(Witness(WitnessKind.CYCLE4, (x, a, y, b)))
    if ca.c >= 4:
        st.fail("four components but at most one common CNC")
    if ca.c == 3:
        _claim2(st, ca, common)
    if not common:
        _no_common_cnc(st, ca)
    _common_cnc(st, ca, common[0])


def _two_non_cncs(st: ProofState, ca, x: int, i1: int, i2: int) -> None:
    g = st.g
    st.step("Claim1.ii", f"non-CNCs {i1},{i2}")
    st.bind("x", x)
    sides = []
    for tag, i in (("1", i1), ("2", i2)):
        comp = ca.components[i]
        u = min(v for v in comp if not g.has_edge(v, x))
        p = _shortest_to_neighbour(g, comp, u, x)
        st.bind(f"u{tag}", u)
        st.bind(f"x{tag}", p[-1])
        st.note("x", f"u{tag}", False)
        st.note("x", f"x{tag}", True)
        sides.append(p)
    p1, p2 = sides
    # window centred on x: pred(x1) x1 x x2 succ(x2)
    raise Found(Witness(WitnessKind.INDUCED_P5, (p1[-2], p1[-1], x, p2[-1], p2[-2])))


def _big_cnc(st: ProofState, x: int, comp: frozenset[int]) -> None:
    g = st.g
    verts = sorted(comp)
    for a in verts:
        for b in verts:
            for c in verts:
                if len({a, b, c}) == 3 and g.has_edge(a, b) and g.has_edge(b, c):
                    if a < c:
                        raise Found(Witness(WitnessKind.CYCLE4, (x, a, b, c)))
    st.fail("CNC with three or more vertices but no path on three vertices")


def _claim2(st: ProofState, ca, common: list[int]) -> None:
    g = st.g
    x, y = st["x"], st["y"]
    st.step("Claim2", "c=3")
    if len(common) != 1:
        st.fail("three components but x, y have no common CNC")
    d1 = common[0]
    d2 = next(i for i in ca.cncs_of(x) if i != d1)
    d3 = next(i for i in ca.cncs_of(y) if i != d1)
    if d2 == d3:
        st.fail("second common CNC in the c=3 case")
    for tag, d in (("u1", d1), ("u2", d2), ("u3", d3)):
        st.bind(tag, min(ca.components[d]))
    st.note("x", "u1", True)
    st.note("y", "u1", True)
    st.note("x", "u2", True)
    st.note("y", "u3", True)
    st.forbid("u3", "x", "x u3 y u1")
    st.forbid("u2", "y", "y u2 x u1")
    raise Found(st.path("u3 y u1 x u2", P5))


def _no_common_cnc(st: ProofState, ca) -> None:
    g = st.g
    x, y = st["x"], st["y"]
    st.step("T1.Case.NoCommonCNC", "c=2")
    dx = ca.cncs_of(x)[0]
    dy = ca.cncs_of(y)[0]
    if dx == dy:
        st.fail("x and y share a CNC in the no-common-CNC case")
    st.bind("y1", min(v for v in ca.components[dx] if g.has_edge(v, y)))
    st.bind("x1", min(v for v in ca.components[dy] if g.has_edge(v, x)))
    raise Found(st.cycle("x y1 y x1"))


def _common_cnc(st: ProofState, ca, d1: int) -> None:
    g = st.g
    x, y = st["x"], st["y"]
    st.step("T1.Case.CommonCNC", "c=2")
    st.bind("u", next(iter(ca.components[d1])))
    d2 = 1 - d1
    st.bind("x1", min(v for v in ca.components[d2] if g.has_edge(v, x)))
    st.bind("y1", min(v for v in ca.components[d2] if g.has_edge(v, y)))
    st.note("x", "x1", True)
    st.note("y", "y1", True)
    if st["x1"] == st["y1"]:
        raise Found(st.cycle("x u y x1"))
    st.forbid("x1", "y", "x u y x1")
    st.forbid("y1", "x", "y u x y1")
    if not st.adj("x1", "y1"):
        st.note("x1", "y1", False)
        raise Found(st.path("x1 x u y y1", P5))
    st.note("x1", "y1", True)
    st.pick("u", ["z"], ["x", "y"])
    st.forbid("z", "x1", "z x1 x u")
    st.forbid("z", "y1", "z y1 y u")
    if not st.adj("z", "x"):
        st.note("z", "x", False)
        raise Found(st.path("z u x x1 y1", P5))
    st.note("z", "x", True)
    if not st.adj("z", "y"):
        st.note("z", "y", False)
        raise Found(st.path("z u y y1 x1", P5))
    st.note("z", "y", True)
    raise Found(st.cycle("x z y u"))

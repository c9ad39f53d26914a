"""Simple undirected graphs over vertices 0..n-1 with bitset adjacency.

Adjacency rows are Python ints used as bitsets, so there is no hard vertex
limit; graphs up to 64 vertices simply keep every row inside one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "DegreeStats",
    "CutAnalysis",
    "GraphError",
    "ParseError",
    "CompleteGraph",
    "Disconnected",
    "bits",
    "mask_of",
    "degree_stats",
    "components",
    "is_connected",
    "min_vertex_cut",
    "induced_subgraph",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "parse_edgelist",
    "write_edgelist",
]


class GraphError(Exception):
    pass


class ParseError(GraphError, ValueError):
    """Malformed graph6 or edge-list input. ``offset`` is the byte/line position."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class CompleteGraph(GraphError):
    pass


class Disconnected(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls.from_adjacency(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        total = sum(a.bit_count() for a in adj)
        return cls(len(adj), tuple(adj), total // 2)

    def validate(self) -> None:
        """Raise GraphError unless adjacency is symmetric, loop-free and in range."""
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}->{u}")
            total += row.bit_count()
        if total != 2 * self.edge_count:
            raise GraphError("edge_count is not half the degree sum")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is ``order[i]`` of this graph."""
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(len(order), ((pos[u], pos[v]) for u, v in self.edges()
                                             if u in pos and v in pos))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DegreeStats:
    min_deg: int
    max_deg: int
    degree_sequence: tuple[int, ...]


def degree_stats(g: Graph) -> DegreeStats:
    """Minimum/maximum degree and sorted degree sequence.

    The empty graph reports ``min_deg == max_deg == 0``.
    """
    seq = tuple(sorted(g.degree(v) for v in range(g.n)))
    if not seq:
        return DegreeStats(0, 0, ())
    return DegreeStats(seq[0], seq[-1], seq)


def _component_masks(g: Graph, alive: int) -> list[int]:
    out = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        alive &= ~comp
    return out


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g - removed``, ordered by smallest member."""
    alive = g.full_mask & ~mask_of(removed)
    return [frozenset(bits(c)) for c in _component_masks(g, alive)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_component_masks(g, g.full_mask)) == 1


@dataclass(frozen=True)
class CutAnalysis:
    """A minimum vertex cut together with the components it leaves behind.

    ``cnc[(x, i)]`` is True when cut vertex ``x`` is adjacent to every vertex of
    ``components[i]`` (a complete neighbourhood component of ``x``).
    """

    cut: frozenset[int]
    components: tuple[frozenset[int], ...]
    cnc: dict[tuple[int, int], bool]

    @property
    def c(self) -> int:
        return len(self.components)

    @property
    def kappa(self) -> int:
        return len(self.cut)

    def cncs_of(self, x: int) -> list[int]:
        return [i for i in range(self.c) if self.cnc[(x, i)]]

    def non_cncs_of(self, x: int) -> list[int]:
        return [i for i in range(self.c) if not self.cnc[(x, i)]]


def _disconnects(g: Graph, removed_mask: int) -> bool:
    alive = g.full_mask & ~removed_mask
    return len(_component_masks(g, alive)) >= 2


# Vertex-split unit-capacity max flow. Node 2v is v_in, 2v+1 is v_out.
def _min_separator_size(g: Graph, s: int, t: int, removed: int, uncuttable: int,
                        limit: int) -> int:
    """Size of a minimum s-t vertex separator in g - removed, capped at ``limit``.

    Vertices in ``uncuttable`` may not be part of the separator.
    """
    big = limit + 1
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def add(a, b, c):
        if (a, b) not in cap:
            out.setdefault(a, []).append(b)
            out.setdefault(b, []).append(a)
            cap[(b, a)] = cap.get((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    alive = g.full_mask & ~removed
    for v in bits(alive):
        inner = big if (v in (s, t) or uncuttable >> v & 1) else 1
        add(2 * v, 2 * v + 1, inner)
        for u in bits(g.adj[v] & alive):
            add(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < big:
        parent = {source: None}
        queue = [source]
        for a in queue:
            if a == sink:
                break
            for b in out.get(a, ()):
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return min(flow, big)


def _min_cut_size_with(g: Graph, forced: int, allowed: int) -> int:
    """Smallest |X| such that forced | X disconnects g, X drawn from ``allowed``."""
    alive = g.full_mask & ~forced
    if len(_component_masks(g, alive)) >= 2:
        return 0
    best = g.n
    verts = list(bits(alive))
    for i, s in enumerate(verts):
        for t in verts[i + 1:]:
            if g.adj[s] >> t & 1:
                continue
            size = _min_separator_size(g, s, t, forced, alive & ~allowed, best)
            best = min(best, size)
    return best


def _lex_smallest_cut_by_flow(g: Graph, kappa: int) -> list[int]:
    chosen = 0
    picked: list[int] = []
    for v in range(g.n):
        if len(picked) == kappa:
            break
        trial = chosen | 1 << v
        rest = g.full_mask & ~mask_of(range(v + 1)) & ~trial
        if len(picked) + 1 + _min_cut_size_with(g, trial, rest) == kappa:
            chosen = trial
            picked.append(v)
    return picked


def min_vertex_cut(g: Graph, brute_force_limit: int = 4) -> CutAnalysis:
    """Minimum vertex cut of a connected, non-complete graph.

    Cuts of size up to ``brute_force_limit`` are found by trying subsets in
    increasing size and lexicographic order; larger connectivity falls back to
    max-flow, still returning the lexicographically smallest minimum cut.
    """
    if g.n == 0 or not is_connected(g):
        raise Disconnected("min_vertex_cut needs a connected graph")
    if g.is_complete():
        raise CompleteGraph("a complete graph has no vertex cut")
    cut = None
    for size in range(0, brute_force_limit + 1):
        for combo in combinations(range(g.n), size):
            if _disconnects(g, mask_of(combo)):
                cut = list(combo)
                break
        if cut is not None:
            break
    if cut is None:
        kappa = _min_cut_size_with(g, 0, g.full_mask)
        cut = _lex_smallest_cut_by_flow(g, kappa)
    cut_mask = mask_of(cut)
    comps = tuple(frozenset(bits(c)) for c in _component_masks(g, g.full_mask & ~cut_mask))
    cnc = {}
    for x in cut:
        for i, comp in enumerate(comps):
            cnc[(x, i)] = mask_of(comp) & ~g.adj[x] == 0
    return CutAnalysis(frozenset(cut), comps, cnc)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """G[s] relabelled to 0..|s|-1 in increasing vertex order, plus the map back."""
    order = sorted(set(s))
    return g.relabel(order), order


# --- graph6 -----------------------------------------------------------------

_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record (optionally prefixed by ``>>graph6<<``)."""
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.rstrip(b"\r\n")
    base = 0
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
        base = len(_HEADER)
    if not data:
        raise ParseError("empty graph6 record", base)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside 63..126 at offset {base + i}", base + i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError(f"truncated 8-byte length prefix at offset {base}", base)
        n, pos = 0, 8
        for b in data[2:8]:
            n = n << 6 | (b - 63)
    else:
        if len(data) < 4:
            raise ParseError(f"truncated 4-byte length prefix at offset {base}", base)
        n, pos = 0, 4
        for b in data[1:4]:
            n = n << 6 | (b - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"record ends early at offset {base + len(data)}: "
                         f"expected {need} data bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise ParseError(f"trailing garbage at offset {base + pos + need}", base + pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError(f"nonzero padding bits at offset {base + pos + need - 1}",
                         base + pos + need - 1)
    return Graph.from_adjacency(adj)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a stream with one graph6 record per line; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        raw = line.encode() if isinstance(line, str) else line
        raw = raw.strip()
        if not raw:
            continue
        try:
            yield parse_graph6(raw)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", exc.offset) from None


# --- edge lists -------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list", 0)
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise ParseError(f"line {lineno}: expected 'n m' header", lineno) from None
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(rows) - 1}", lineno)
    edges = []
    for lineno, parts in rows[1:]:
        try:
            u, v = (int(t) for t in parts)
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'u v'", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"line {lineno}: bad edge {u} {v}", lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"

"""Cycle and induced-path detection on bitset graphs.

"Contains a 4-cycle / 8-cycle" means a cycle *subgraph*: chords are allowed.
Only the path searches and :func:`shortest_induced_cycle_at_least` insist on
induced (chordless) structures.
"""

from __future__ import annotations

from .graph import Graph, bits

__all__ = [
    "find_c4",
    "find_cycle_of_length",
    "longest_induced_path",
    "is_pk_free",
    "shortest_induced_cycle_at_least",
    "cycle_spectrum",
    "power_of_two_cycle",
    "is_cycle",
    "is_induced_path",
]


def is_cycle(g: Graph, cycle, induced: bool = False) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k or not all(0 <= v < g.n for v in cycle):
        return False
    if not all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)):
        return False
    if induced:
        edges = sum(g.has_edge(a, b) for i, a in enumerate(cycle) for b in cycle[i + 1:])
        return edges == k
    return True


def is_induced_path(g: Graph, path) -> bool:
    k = len(path)
    if len(set(path)) != k or not all(0 <= v < g.n for v in path):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(path[i], path[j]) != (j == i + 1):
                return False
    return True


def find_c4(g: Graph) -> list[int] | None:
    """First pair a < b with two common neighbours x < y, as the cycle [a, x, b, y]."""
    for a in range(g.n):
        row = g.adj[a]
        for b in range(a + 1, g.n):
            common = row & g.adj[b]
            if common.bit_count() >= 2:
                it = bits(common)
                x = next(it)
                y = next(it)
                return [a, x, b, y]
    return None


def _reach(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` through ``allowed`` (start always included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def find_cycle_of_length(g: Graph, length: int) -> list[int] | None:
    """Some cycle subgraph with exactly ``length`` vertices, or None.

    The search anchors the cycle at its smallest vertex and extends a simple path
    depth-first through larger vertices, pruning whenever too few vertices remain
    reachable to close the cycle.
    """
    if length < 3 or length > g.n:
        return None
    for s in range(g.n - length + 1):
        higher = g.full_mask & ~((2 << s) - 1)
        if (g.adj[s] & higher).bit_count() < 2:
            continue
        path = [s]
        found = _extend_cycle(g, s, length, path, 1 << s, higher)
        if found:
            return path
    return None


def _extend_cycle(g: Graph, s: int, length: int, path: list[int], used: int, higher: int) -> bool:
    last = path[-1]
    need = length - len(path)
    if need == 0:
        return bool(g.adj[last] >> s & 1)
    free = higher & ~used
    if need > 1:
        # the rest of the cycle must lie in one piece that touches both ends
        region = _reach(g, last, free) & ~(1 << last)
        if region.bit_count() < need or not (g.adj[s] & region):
            return False
    cand = g.adj[last] & free
    if need == 1:
        cand &= g.adj[s]
    for w in bits(cand):
        path.append(w)
        if _extend_cycle(g, s, length, path, used | 1 << w, higher):
            return True
        path.pop()
    return False


def longest_induced_path(g: Graph, stop_at: int) -> tuple[int, list[int]]:
    """Backtracking search for a long induced path.

    Returns as soon as an induced path with ``stop_at`` vertices is found;
    otherwise returns a maximum induced path.  Pass ``stop_at=g.n`` for the true
    maximum.  Reported paths start at their smaller endpoint.
    """
    if g.n == 0:
        return 0, []
    best: list[int] = []
    path: list[int] = []

    def extend(blocked: int) -> bool:
        nonlocal best
        last = path[-1]
        if len(path) > len(best) and (len(path) == 1 or path[0] < last):
            best = list(path)
            if len(best) >= stop_at:
                return True
        new_blocked = blocked | g.adj[last] | 1 << last
        cand = g.adj[last] & ~blocked & ~(1 << last)
        for w in bits(cand):
            # everything later on the path avoids new_blocked, so it is an upper bound
            room = _reach(g, w, g.full_mask & ~new_blocked)
            if len(path) + room.bit_count() <= len(best):
                continue
            path.append(w)
            if extend(new_blocked):
                return True
            path.pop()
        return False

    for s in range(g.n):
        path.append(s)
        if extend(0):
            break
        path.pop()
    return len(best), best


def is_pk_free(g: Graph, k: int) -> bool:
    """True when g has no induced path on k vertices."""
    return longest_induced_path(g, k)[0] < k


def _induced_cycle_of_length(g: Graph, k: int) -> list[int] | None:
    for s in range(g.n - k + 1):
        higher = g.full_mask & ~((2 << s) - 1)
        nbrs = g.adj[s] & higher
        if nbrs.bit_count() < 2:
            continue
        for p1 in bits(nbrs):
            path = [s, p1]
            if _extend_induced(g, k, path, higher):
                return path
    return None


def _extend_induced(g: Graph, k: int, path: list[int], higher: int) -> bool:
    s, last = path[0], path[-1]
    need = k - len(path)
    on_path = 0
    inner = 0
    for v in path:
        on_path |= 1 << v
    for v in path[1:-1]:
        inner |= g.adj[v]
    free = higher & ~on_path & ~inner
    if need == 1:
        for w in bits(g.adj[last] & g.adj[s] & free):
            if w > path[1]:
                path.append(w)
                return True
        return False
    # all but the closing vertex must avoid N(s)
    mid = free & ~g.adj[s]
    region = _reach(g, last, mid)
    if region.bit_count() < need:
        return False
    touch = 0
    for v in bits(region):
        touch |= g.adj[v]
    if not touch & free & g.adj[s]:
        return False
    for w in bits(g.adj[last] & mid):
        path.append(w)
        if _extend_induced(g, k, path, higher):
            return True
        path.pop()
    return False


def shortest_induced_cycle_at_least(g: Graph, lo: int) -> list[int] | None:
    """A chordless cycle of minimum length among those with at least ``lo`` vertices.

    Lengths are tried in increasing order. Within one length the returned cycle
    is the lexicographically smallest vertex sequence that starts at the
    cycle's minimum vertex and runs towards its smaller neighbour.
    """
    for k in range(max(lo, 3), g.n + 1):
        cyc = _induced_cycle_of_length(g, k)
        if cyc is not None:
            return cyc
    return None


def cycle_spectrum(g: Graph, max_len: int | None = None) -> set[int]:
    top = g.n if max_len is None else min(max_len, g.n)
    return {L for L in range(3, top + 1) if find_cycle_of_length(g, L) is not None}


def power_of_two_cycle(g: Graph) -> tuple[int, list[int]] | None:
    """Smallest m >= 2 with a 2**m-cycle in g, with a witness cycle."""
    m = 2
    while 1 << m <= g.n:
        cyc = find_cycle_of_length(g, 1 << m)
        if cyc is not None:
            return m, cyc
        m += 1
    return None

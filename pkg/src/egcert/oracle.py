"""Exhaustive existence checks used as an independent oracle.

Nothing here shares code with the detectors or the extractors: subgraphs are
found by trying every vertex subset and checking it directly on a dense
adjacency matrix.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph
from .witness import WitnessKind

__all__ = ["OrderTooLarge", "brute_force_witness_exists", "ORACLE_MAX_N"]

ORACLE_MAX_N = 12


class OrderTooLarge(ValueError):
    pass


def _matrix(g: Graph) -> list[list[bool]]:
    m = [[False] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        m[u][v] = m[v][u] = True
    return m


def _hamiltonian_cycle(m, verts) -> bool:
    # Held-Karp over subsets, cycles anchored at verts[0]
    k = len(verts)
    if k < 3:
        return False
    reach = [0] * (1 << k)
    reach[1] = 1
    for mask in range(1, 1 << k):
        if not mask & 1:
            continue
        ends = reach[mask]
        if not ends:
            continue
        for j in range(k):
            if ends >> j & 1:
                for t in range(1, k):
                    if not mask >> t & 1 and m[verts[j]][verts[t]]:
                        reach[mask | 1 << t] |= 1 << t
    full = (1 << k) - 1
    return any(reach[full] >> j & 1 and m[verts[j]][verts[0]] for j in range(1, k))


def _is_induced_path(m, verts) -> bool:
    k = len(verts)
    deg = [sum(m[a][b] for b in verts if b != a) for a in verts]
    if sum(deg) != 2 * (k - 1):
        return False
    if k == 1:
        return True
    if sorted(deg) != [1, 1] + [2] * (k - 2):
        return False
    # k-1 edges with that degree sequence is a path iff connected
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        a = stack.pop()
        for b in verts:
            if m[a][b] and b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == k


def brute_force_witness_exists(g: Graph, kind: WitnessKind) -> bool:
    """Decide by exhaustive subset search whether g has a witness of ``kind``."""
    if g.n > ORACLE_MAX_N:
        raise OrderTooLarge(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    kind = WitnessKind(kind)
    m = _matrix(g)
    size = kind.size
    for verts in combinations(range(g.n), size):
        if kind.is_cycle:
            if _hamiltonian_cycle(m, verts):
                return True
        elif _is_induced_path(m, verts):
            return True
    return False

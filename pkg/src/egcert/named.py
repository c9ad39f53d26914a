"""Small named graphs used by tests, demos and regression checks."""

from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint.

    Vertices 0..4 are the outer 5-cycle {0,1},{2,3},{4,0},{1,2},{3,4};
    vertices 5..9 are the remaining pairs in the matching order.
    """
    outer = [(0, 1), (2, 3), (4, 0), (1, 2), (3, 4)]
    inner = [(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]
    labels = [frozenset(p) for p in outer + inner]
    return Graph.from_edges(10, ((i, j) for i, j in combinations(range(10), 2)
                                 if not labels[i] & labels[j]))


def heawood() -> Graph:
    """Incidence graph of the Fano plane (points 0..6, lines 7..13)."""
    lines = [{(i + d) % 7 for d in (0, 1, 3)} for i in range(7)]
    return Graph.from_edges(14, ((p, 7 + li) for li, line in enumerate(lines) for p in line))


def two_k4_sharing_vertex() -> Graph:
    """Two copies of K4 glued at vertex 0."""
    edges = list(combinations([0, 1, 2, 3], 2)) + list(combinations([0, 4, 5, 6], 2))
    return Graph.from_edges(7, edges)

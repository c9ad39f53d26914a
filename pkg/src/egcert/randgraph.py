"""Seeded random graphs with minimum degree >= 3.

Plain G(n, p) graphs almost always contain a 4-cycle, which exercises only the
first branch of each extractor.  The ``forbid`` family grows a graph edge by
edge, skipping any edge that would close a cycle of a forbidden length, then
keeps the 3-core; this is what reaches the deeper case analysis.
"""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph, bits, components, induced_subgraph

__all__ = ["FORBID_FAMILIES", "random_graph", "random_graphs"]

FORBID_FAMILIES: tuple[tuple[int, ...], ...] = (
    (),
    (4,),
    (4, 5),
    (4, 8),
    (4, 5, 8),
    (4, 6, 8),
    (4, 5, 6, 8),
    (3, 4),
    (3, 4, 5),
    (3, 4, 5, 6),
    (3, 4, 5, 7),
)


def _has_path_with_edges(adj: list[int], u: int, v: int, length: int) -> bool:
    # simple u-v path with exactly `length` edges
    def dfs(x: int, depth: int, used: int) -> bool:
        if depth == length:
            return x == v
        for y in bits(adj[x] & ~used):
            if y == v and depth + 1 != length:
                continue
            if dfs(y, depth + 1, used | 1 << y):
                return True
        return False

    return dfs(u, 0, 1 << u)


def _core(adj: list[int], k: int) -> int:
    alive = (1 << len(adj)) - 1
    changed = True
    while changed:
        changed = False
        for x in bits(alive):
            if (adj[x] & alive).bit_count() < k:
                alive &= ~(1 << x)
                changed = True
    return alive


def random_graph(rng: random.Random, n: int, forbid: tuple[int, ...] = (),
                 p: float = 0.35, min_degree: int = 3) -> Graph | None:
    """Connected graph with minimum degree >= ``min_degree`` on at most n vertices.

    Edges are offered in random order and kept with probability p (always, when
    ``forbid`` is non-empty) unless they close a cycle whose length is in
    ``forbid``.  The result is the ``min_degree``-core, restricted to the
    component of its smallest vertex, with shuffled labels.  Returns None when
    the core is empty.
    """
    adj = [0] * n
    pairs = [(u, v) for v in range(n) for u in range(v)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if not forbid and rng.random() >= p:
            continue
        if any(_has_path_with_edges(adj, u, v, length - 1) for length in forbid):
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    keep = list(bits(_core(adj, min_degree)))
    if not keep:
        return None
    g, _ = induced_subgraph(Graph.from_adjacency(adj), keep)
    g, _ = induced_subgraph(g, sorted(components(g)[0]))
    order = list(range(g.n))
    rng.shuffle(order)
    return g.relabel(order)


def random_graphs(seed: int, count: int, n_max: int = 16, n_min: int = 4,
                  min_degree: int = 3) -> Iterator[Graph]:
    """``count`` graphs from a single seed, cycling through every forbid family."""
    rng = random.Random(seed)
    made = 0
    attempt = 0
    while made < count:
        forbid = FORBID_FAMILIES[attempt % len(FORBID_FAMILIES)]
        attempt += 1
        n = rng.randint(n_min, n_max)
        g = random_graph(rng, n, forbid, p=rng.uniform(0.2, 0.8), min_degree=min_degree)
        if g is None or g.n < n_min:
            continue
        made += 1
        yield g

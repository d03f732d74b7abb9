"""Small graph families and seeded random graphs, vertices numbered 1..n."""

import random

from .errors import ContractError
from .graph import Graph, edge_between


def path(n):
    if n < 1:
        raise ContractError("need n >= 1")
    return Graph.from_edges([(i, i + 1) for i in range(1, n)], vertices=[1])


def cycle(n):
    if n < 3:
        raise ContractError("need n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph.from_edges(edges)


def complete(n):
    if n < 1:
        raise ContractError("need n >= 1")
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return Graph.from_edges(edges, vertices=[1])


def star(n):
    """K_{1,n-1}: vertex 1 joined to 2..n."""
    if n < 2:
        raise ContractError("need n >= 2")
    return Graph.from_edges([(1, i) for i in range(2, n + 1)])


def wheel(n):
    """A hub (vertex 1) joined to every vertex of the cycle 2..n."""
    if n < 4:
        raise ContractError("need n >= 4")
    rim = [(i, i + 1) for i in range(2, n)] + [(n, 2)]
    spokes = [(1, i) for i in range(2, n + 1)]
    return Graph.from_edges(rim + spokes)


def random_graph(n, *, edge_prob=0.5, max_degree=None, seed=0):
    """Seeded random graph; an optional degree cap is respected greedily."""
    if n < 1:
        raise ContractError("need n >= 1")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rng.shuffle(pairs)
    degree = {v: 0 for v in range(1, n + 1)}
    edges = []
    for u, v in pairs:
        if max_degree is not None and (degree[u] >= max_degree or degree[v] >= max_degree):
            continue
        if rng.random() < edge_prob:
            edges.append(edge_between(u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph.from_edges(edges, vertices=range(1, n + 1))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "wheel": wheel,
}

"""Metrics on simple undirected graphs given as boolean adjacency matrices."""

from __future__ import annotations

import math
from collections import deque

import numpy as np

INF = math.inf


def neighbours(adj: np.ndarray) -> list[list[int]]:
    return [np.flatnonzero(row).tolist() for row in adj]


def edge_list(adj: np.ndarray) -> list[tuple[int, int]]:
    i, j = np.nonzero(np.triu(adj, 1))
    return list(zip(i.tolist(), j.tolist()))


def distance_matrix(adj: np.ndarray) -> np.ndarray:
    """All-pairs hop distances (float, inf when unreachable) by level-synchronous BFS from every source."""
    n = adj.shape[0]
    dist = np.full((n, n), INF)
    if n == 0:
        return dist
    A = adj.astype(np.float32)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    np.fill_diagonal(dist, 0)
    level = 0
    while frontier.any():
        level += 1
        nxt = ((frontier.astype(np.float32) @ A) > 0) & ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def diameter(adj: np.ndarray, core: int | None = None) -> float | None:
    """Largest distance between distinct vertices among the first ``core`` vertices.

    Distances may route through the remaining vertices. Returns None for an
    empty vertex set, 0 for a single vertex and ``inf`` when disconnected.
    """
    n = adj.shape[0] if core is None else core
    if n == 0:
        return None
    if n == 1:
        return 0
    d = distance_matrix(adj)[:n, :n].max()
    return INF if math.isinf(d) else int(d)


def girth(adj: np.ndarray) -> float:
    """Length of a shortest cycle, ``inf`` for forests."""
    nbrs = neighbours(adj)
    best = INF
    for src in range(len(nbrs)):
        if best == 3:
            break
        dist = {src: 0}
        parent = {src: -1}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_connected(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    if n <= 1:
        return True
    return bool(np.isfinite(distance_matrix(adj)[0]).all())


def two_colouring(adj: np.ndarray) -> list[int] | None:
    """A proper 2-colouring, or None when an odd cycle exists."""
    nbrs = neighbours(adj)
    colour = [-1] * len(nbrs)
    for s in range(len(nbrs)):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_bipartite(adj: np.ndarray) -> bool:
    return two_colouring(adj) is not None


def star_centre(adj: np.ndarray) -> int | None:
    """Centre of a star K_{1,m} (m >= 1), or None if the graph is not a star.

    For K_2 the centre is vertex 0.
    """
    n = adj.shape[0]
    if n < 2:
        return None
    deg = adj.sum(axis=1)
    if int(deg.sum()) != 2 * (n - 1):
        return None
    centres = np.flatnonzero(deg == n - 1)
    return int(centres[0]) if len(centres) else None

"""Shared fixtures: tiny graph builders and independent oracles.

The oracles deliberately avoid the library's own machinery.  Distances come
from a plain BFS, intervals from literal enumeration of every shortest path,
and the reference geodetic number from subset enumeration over those
intervals.  Anything the package computes with distance arithmetic or
bitmask folding is checked against these.
"""

from __future__ import annotations

import itertools
from collections import deque

from hypothesis import strategies as st

from geodetic.graph import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """Center 0 with the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def all_shortest_paths(g: Graph, i: int, j: int) -> list[tuple[int, ...]]:
    """Every shortest i-j path, found by walking the BFS layers backwards."""
    if i == j:
        return [(i,)]
    dist = bfs_distances(g, i)
    if dist[j] < 0:
        return []
    paths: list[tuple[int, ...]] = []

    def walk(v: int, tail: tuple[int, ...]) -> None:
        if v == i:
            paths.append((i,) + tail)
            return
        for p in g.adj[v]:
            if dist[p] == dist[v] - 1:
                walk(p, (v,) + tail)

    walk(j, ())
    return paths


def oracle_interval(g: Graph, i: int, j: int) -> frozenset[int]:
    """Union of the vertices of every shortest i-j path."""
    out: set[int] = set()
    for path in all_shortest_paths(g, i, j):
        out.update(path)
    return frozenset(out)


def oracle_closure(g: Graph, members: set[int]) -> frozenset[int]:
    out: set[int] = set(members)
    for a, b in itertools.combinations(sorted(members), 2):
        out |= oracle_interval(g, a, b)
    return frozenset(out)


def oracle_geodetic_number(g: Graph) -> int:
    """Reference value by subset enumeration; keep n small."""
    assert g.n <= 8, "oracle is exponential, use it on tiny graphs only"
    everything = frozenset(range(g.n))
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if oracle_closure(g, set(combo)) == everything:
                return size
    raise AssertionError("unreachable: the full vertex set is geodetic")


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    """Random spanning tree plus a random subset of the remaining pairs."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    spare = [(i, j) for i in range(n) for j in range(i + 1, n)
             if (i, j) not in edges]
    if spare:
        extra = draw(st.lists(st.sampled_from(spare), unique=True,
                              max_size=len(spare)))
        edges.update(extra)
    return Graph(n, sorted(edges))

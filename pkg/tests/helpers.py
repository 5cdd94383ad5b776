"""Independent oracles and random generators shared by the tests."""

from __future__ import annotations

import random

import networkx as nx

from burnkit.graph import Graph


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def random_connected(n: int, rng: random.Random, extra: int | None = None) -> Graph:
    """Random spanning tree plus ``extra`` random chords, vertices shuffled."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[rng.randrange(i)]))) for i in range(1, n)}
    if extra is None:
        extra = rng.randint(0, n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(pairs)
    edges.update(pairs[:extra])
    return Graph.from_edges(n, sorted(edges))


def random_bipartite_min_degree(d: int, rng: random.Random, max_side: int = 14) -> Graph:
    """Connected random bipartite graph with every degree >= d."""
    while True:
        a = rng.randint(d, max_side)
        b = rng.randint(d, max_side)
        p = rng.uniform(0.05, 0.5)
        edges = {(i, a + j) for i in range(a) for j in range(b) if rng.random() < p}
        deg = [0] * (a + b)
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for v in range(a + b):
            other = range(a, a + b) if v < a else range(a)
            free = [u for u in other if (min(u, v), max(u, v)) not in edges]
            rng.shuffle(free)
            while deg[v] < d:
                u = free.pop()
                edges.add((min(u, v), max(u, v)))
                deg[u] += 1
                deg[v] += 1
        g = Graph.from_edges(a + b, sorted(edges))
        if g.is_connected:
            return g


def trees_bruteforce(n: int) -> list[nx.Graph]:
    """Free trees on n vertices: grow every tree on n-1 by one leaf, reject isomorphs pairwise."""
    if n == 1:
        t = nx.Graph()
        t.add_node(0)
        return [t]
    out: list[nx.Graph] = []
    for t in trees_bruteforce(n - 1):
        for v in list(t.nodes):
            h = t.copy()
            h.add_edge(v, n - 1)
            if not any(nx.is_isomorphic(h, o) for o in out):
                out.append(h)
    return out

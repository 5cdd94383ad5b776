"""Immutable simple undirected graphs and the distance queries used everywhere else."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Malformed graph input. ``position`` is a 1-based line (edge-list) or byte offset (graph6)."""

    def __init__(self, message: str, position: int | None = None, unit: str = "byte"):
        self.position = position
        if position is not None:
            message = f"{message} (at {unit} {position})"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency length must equal vertex_count")
        for v, nbrs in enumerate(self.adjacency):
            for i, u in enumerate(nbrs):
                if not 0 <= u < self.vertex_count:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if i and nbrs[i - 1] >= u:
                    raise ValueError(f"neighbors of {v} not strictly sorted")
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge {v}-{u} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return self.vertex_count

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(distances_from(self, v).dist) for v in range(self.vertex_count))

    @cached_property
    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return UNREACHABLE not in distances_from(self, 0).dist

    def is_tree(self) -> bool:
        return self.is_connected and self.edge_count == self.vertex_count - 1


@dataclass(frozen=True)
class DistanceProfile:
    source: int
    dist: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...] = field(repr=False)


def distances_from(g: Graph, v: int) -> DistanceProfile:
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    dist = [UNREACHABLE] * g.vertex_count
    dist[v] = 0
    layers = [[v]]
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                if du + 1 == len(layers):
                    layers.append([])
                layers[du + 1].append(w)
                queue.append(w)
    return DistanceProfile(v, tuple(dist), tuple(tuple(sorted(layer)) for layer in layers))


def require_connected(g: Graph) -> None:
    if not g.is_connected:
        raise DisconnectedGraphError("graph is not connected" if g.vertex_count else "graph is empty")


def eccentricity_radius(g: Graph) -> tuple[list[int], int, int]:
    """Return (eccentricities, radius, lowest-index center)."""
    require_connected(g)
    ecc = [max(row) for row in g.distance_matrix]
    radius = min(ecc)
    return ecc, radius, ecc.index(radius)


def diameter(g: Graph) -> int:
    return max(eccentricity_radius(g)[0])


def closed_neighborhood(g: Graph, v: int, r: int) -> frozenset[int]:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    row = g.distance_matrix[v]
    return frozenset(u for u, d in enumerate(row) if d != UNREACHABLE and d <= r)


@dataclass(frozen=True)
class GraphStats:
    degrees: tuple[int, ...]
    degree_counts: dict[int, int]
    triangle_free: bool
    connected: bool


def is_triangle_free(g: Graph) -> bool:
    adj = [set(a) for a in g.adjacency]
    for u, v in g.edges():
        # smaller side drives the intersection
        a, b = (adj[u], adj[v]) if len(adj[u]) <= len(adj[v]) else (adj[v], adj[u])
        if not a.isdisjoint(b):
            return False
    return True


def graph_stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    counts: dict[int, int] = {}
    for d in degs:
        counts[d] = counts.get(d, 0) + 1
    return GraphStats(tuple(degs), dict(sorted(counts.items())), is_triangle_free(g), g.is_connected)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled 0..k-1 in the order of ``vertices``; returns (graph, label map)."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(vertices), edges), list(vertices)


def strip_leaves(g: Graph) -> tuple[Graph, list[int]]:
    """Delete every degree-1 vertex. The label map sends new indices to old ones."""
    require_connected(g)
    if g.vertex_count < 2:
        raise ValueError("strip_leaves needs at least 2 vertices")
    keep = [v for v in range(g.vertex_count) if g.degree(v) != 1]
    if not keep:
        raise ValueError("every vertex is a leaf; stripped graph would be empty")
    return induced_subgraph(g, keep)


# -- small named graphs ------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Hub 0 joined to ``leaves`` leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def spider(legs: int, length: int) -> Graph:
    """Hub 0 with ``legs`` paths of ``length`` edges each."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)

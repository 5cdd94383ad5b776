"""Exact burning numbers via the ball-cover formulation.

A schedule x_1..x_k burns G in k rounds iff the closed balls N_{k-i}(x_i)
cover every vertex. Sources may repeat; a repeated or already-burning
source only contributes a redundant ball, so the minimum k is unchanged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import Graph, eccentricity_radius, require_connected
from .intmath import ceil_sqrt

BRUTEFORCE_MAX_N = 10


@dataclass(frozen=True)
class BurningSchedule:
    sources: tuple[int, ...]

    def __post_init__(self):
        if not self.sources:
            raise ValueError("a schedule needs at least one source")

    @property
    def rounds(self) -> int:
        return len(self.sources)

    def radii(self) -> list[int]:
        k = self.rounds
        return [k - i for i in range(1, k + 1)]


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact solve.

    ``burning_number`` is None when the answer exceeds the round budget; the
    search then only proves ``lower_bound``.
    """

    burning_number: int | None
    witness: BurningSchedule | None
    lower_bound: int
    lower_bound_proof: str
    searched: tuple[int, ...] = field(default=(), repr=False)

    @property
    def known(self) -> bool:
        return self.burning_number is not None


def verify_schedule(g: Graph, s: BurningSchedule | tuple[int, ...] | list[int]) -> bool:
    require_connected(g)
    sources = s.sources if isinstance(s, BurningSchedule) else tuple(s)
    k = len(sources)
    for x in sources:
        if not 0 <= x < g.n:
            raise IndexError(f"source {x} out of range")
    dist = g.distance_matrix
    return all(
        any(dist[x][v] <= k - i for i, x in enumerate(sources, start=1))
        for v in range(g.n)
    )


class _BallCover:
    """Bitmask balls N_r(v) for r < cap, shared by all decision calls on one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.dist = g.distance_matrix
        self.ecc, self.radius, self.center = eccentricity_radius(g)
        self._balls: list[list[int]] = []
        self._max_ball: list[int] = []

    def balls(self, r: int) -> list[int]:
        while len(self._balls) <= r:
            rr = len(self._balls)
            row = []
            for v in range(self.n):
                mask = 0
                for u, d in enumerate(self.dist[v]):
                    if d <= rr:
                        mask |= 1 << u
                row.append(mask)
            self._balls.append(row)
            self._max_ball.append(max(m.bit_count() for m in row))
        return self._balls[r]

    def max_ball(self, r: int) -> int:
        self.balls(r)
        return self._max_ball[r]

    def lower_bound(self) -> tuple[int, str]:
        """Cheap lower bound on b(G) with a description of why it holds."""
        k = 1
        total = self.max_ball(0)
        while total < self.n:
            total += self.max_ball(k)
            k += 1
        # a diametral path of D+1 vertices meets a radius-i ball in at most 2i+1 vertices
        diam = max(self.ecc)
        k_path = ceil_sqrt(diam + 1)
        if k_path > k:
            return k_path, f"diametral path of {diam + 1} vertices needs sum(2i+1) >= {diam + 1}"
        return k, f"largest balls of radii 0..{k - 2} cover fewer than {self.n} vertices"

    def decide(self, k: int) -> tuple[int, ...] | None:
        """A k-round schedule, or None when exhaustive search finds none."""
        if k >= self.radius + 1:
            return (self.center,) + (self.center,) * (k - 1)
        for r in range(k):
            self.balls(r)
        failed: set[tuple[int, int]] = set()
        chosen: list[int] = []

        def search(i: int, uncovered: int) -> bool:
            if not uncovered:
                return True
            if i == k:
                return False
            key = (i, uncovered)
            if key in failed:
                return False
            r = k - 1 - i
            need = uncovered.bit_count()
            ranked = self._candidates(r, uncovered)
            # largest remaining balls must be able to reach every uncovered vertex
            reach = ranked[0][0].bit_count()
            for rr in range(r - 1, -1, -1):
                if reach >= need:
                    break
                reach += max((m & uncovered).bit_count() for m in self._balls[rr])
            if reach < need:
                failed.add(key)
                return False
            for mask, v in ranked:
                chosen.append(v)
                if search(i + 1, uncovered & ~mask):
                    return True
                chosen.pop()
            failed.add(key)
            return False

        if not search(0, self.full):
            return None
        return tuple(chosen) + (0,) * (k - len(chosen))

    def _candidates(self, r: int, uncovered: int) -> list[tuple[int, int]]:
        """Undominated (new-coverage mask, center) pairs, most coverage first, ties by index."""
        best: dict[int, int] = {}
        for v, ball in enumerate(self._balls[r]):
            m = ball & uncovered
            if m and m not in best:
                best[m] = v
        masks = sorted(best, key=lambda m: (-m.bit_count(), best[m]))
        kept: list[int] = []
        for m in masks:
            if not any(m & k == m for k in kept):
                kept.append(m)
        return [(m, best[m]) for m in kept]


def burning_number_exact(g: Graph, budget: int | None = None) -> ExactResult:
    """Iterative deepening on k from a counting lower bound up to rad(G)+1.

    With a ``budget``, rounds above it are never searched and a result with
    ``burning_number=None`` is returned if every k <= budget is infeasible.
    """
    require_connected(g)
    bc = _BallCover(g)
    lb, why = bc.lower_bound()
    searched = []
    k = lb
    top = bc.radius + 1
    if budget is not None:
        top = min(top, budget)
    while k <= top:
        schedule = bc.decide(k)
        searched.append(k)
        if schedule is not None:
            if k == lb:
                proof = "trivial: k = 1" if k == 1 else why
            else:
                proof = f"exhaustive search found no schedule with {k - 1} rounds"
            return ExactResult(k, BurningSchedule(schedule), k, proof, tuple(searched))
        k += 1
    if k == lb:
        return ExactResult(None, None, lb, why, tuple(searched))
    return ExactResult(None, None, k, f"exhaustive search found no schedule with {k - 1} rounds",
                       tuple(searched))


def burns_within(g: Graph, k: int) -> BurningSchedule | None:
    """Decision form: a schedule of exactly k rounds, or None if none exists."""
    require_connected(g)
    if k < 1:
        return None
    bc = _BallCover(g)
    lb, _ = bc.lower_bound()
    if k < lb:
        return None
    sched = bc.decide(k)
    return BurningSchedule(sched) if sched is not None else None


def burning_number_bruteforce(g: Graph) -> int:
    """Minimum k by trying every length-k source sequence, k = 1, 2, ...

    Deliberately naive: its own Floyd-Warshall distances, no pruning.
    """
    n = g.n
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to {BRUTEFORCE_MAX_N} vertices, got {n}")
    require_connected(g)
    inf = n + 1
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    for k in range(1, n + 1):
        for seq in itertools.product(range(n), repeat=k):
            if all(any(d[x][v] <= k - i for i, x in enumerate(seq, start=1)) for v in range(n)):
                return k
    raise AssertionError("unreachable: n rounds always suffice")


def is_well_burnable(g: Graph) -> tuple[bool, ExactResult]:
    """b(G) <= ceil(sqrt(n)); solved exactly with the budget set to ceil(sqrt(n))."""
    target = ceil_sqrt(g.n)
    res = burning_number_exact(g, budget=target)
    return res.known, res


def spanning_trees(g: Graph):
    """Yield the edge lists of all spanning trees (include/exclude recursion)."""
    require_connected(g)
    n = g.n
    edges = g.edges()
    m = len(edges)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connectable(chosen, start):
        p = list(range(n))

        def f(x):
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        comps = n
        for u, v in itertools.chain(chosen, edges[start:]):
            a, b = f(u), f(v)
            if a != b:
                p[a] = b
                comps -= 1
        return comps == 1

    chosen: list[tuple[int, int]] = []

    def rec(i):
        if len(chosen) == n - 1:
            yield list(chosen)
            return
        if m - i < n - 1 - len(chosen):
            return
        u, v = edges[i]
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            parent[a] = a
        if still_connectable(chosen, i + 1):
            yield from rec(i + 1)

    if n == 1:
        yield []
        return
    yield from rec(0)


def spanning_tree_oracle(g: Graph, max_vertices: int = 10) -> int:
    """min b(T) over spanning trees T, solving each isomorphism class once."""
    from .enumeration import tree_code

    if g.n > max_vertices:
        raise ValueError(f"spanning tree oracle limited to {max_vertices} vertices, got {g.n}")
    cache: dict[tuple[int, ...], int] = {}
    best = None
    for tree_edges in spanning_trees(g):
        t = Graph.from_edges(g.n, tree_edges)
        code = tree_code(t)
        if code not in cache:
            cache[code] = burning_number_exact(t).burning_number
        b = cache[code]
        if best is None or b < best:
            best = b
    return best

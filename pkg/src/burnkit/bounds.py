"""Upper bounds on the burning number.

Two sources: greedy maximal packings of disjoint r-balls (b <= |A| + 2r,
with an explicit schedule), and neighborhood-size lower bounds ("tetherings")
turned into a bound that depends only on the vertex count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact import BurningSchedule, verify_schedule
from .graph import Graph, eccentricity_radius, require_connected
from .intmath import ceil_int_plus_sqrt, ceil_sqrt, sqrt_at_least


# -- packing -----------------------------------------------------------------

@dataclass(frozen=True)
class PackingCertificate:
    radius: int
    packing: tuple[int, ...]
    # witness[v]: a member of the packing within distance 2r of v
    witness: dict[int, int] = field(repr=False)
    bound: int
    schedule: BurningSchedule


def greedy_packing(g: Graph, r: int) -> PackingCertificate:
    require_connected(g)
    if r < 1:
        raise ValueError("radius must be at least 1")
    dist = g.distance_matrix
    taken: set[int] = set()
    packing: list[int] = []
    for v in range(g.n):
        ball = {u for u in range(g.n) if dist[v][u] <= r}
        if taken.isdisjoint(ball):
            packing.append(v)
            taken |= ball
    witness = {}
    for v in range(g.n):
        if v in packing:
            continue
        a = next((a for a in packing if dist[a][v] <= 2 * r), None)
        if a is None:
            raise AssertionError(f"packing not maximal at {v}")
        witness[v] = a
    k = len(packing) + 2 * r
    sources = list(packing)
    covered = [False] * g.n
    for i, x in enumerate(sources, start=1):
        for u in range(g.n):
            if dist[x][u] <= k - i:
                covered[u] = True
    while len(sources) < k:
        filler = next((u for u in range(g.n) if not covered[u]), 0)
        sources.append(filler)
        radius = k - len(sources)
        for u in range(g.n):
            if dist[filler][u] <= radius:
                covered[u] = True
    schedule = BurningSchedule(tuple(sources))
    if not verify_schedule(g, schedule):
        raise AssertionError("packing schedule failed to burn the graph")
    return PackingCertificate(r, tuple(packing), witness, k, schedule)


@dataclass(frozen=True)
class PackingSummary:
    """Best packing certificate over r = 1..rad(G) plus the center-burn bound rad(G)+1."""

    best: PackingCertificate | None
    per_radius: dict[int, int]
    center_bound: int
    center: int

    @property
    def packing_bound(self) -> int | None:
        return None if self.best is None else self.best.bound

    @property
    def bound(self) -> int:
        if self.best is None:
            return self.center_bound
        return min(self.best.bound, self.center_bound)

    @property
    def method(self) -> str:
        if self.best is not None and self.best.bound <= self.center_bound:
            return f"packing r={self.best.radius}"
        return "center burn"


def best_packing_bound(g: Graph) -> PackingSummary:
    _, rad, center = eccentricity_radius(g)
    best = None
    per_radius = {}
    for r in range(1, rad + 1):
        cert = greedy_packing(g, r)
        per_radius[r] = cert.bound
        if best is None or cert.bound < best.bound:
            best = cert
    return PackingSummary(best, per_radius, rad + 1, center)


# -- tetherings ----------------------------------------------------------------

@dataclass(frozen=True)
class Constant:
    c: float

    def __call__(self, x: float) -> float:
        return self.c


@dataclass(frozen=True)
class Linear:
    a: float

    def __call__(self, x: float) -> float:
        return self.a * x


@dataclass(frozen=True)
class ScaledFloor:
    """a * floor((x + shift) / modulus)"""

    a: float
    shift: float
    modulus: int

    def __call__(self, x: float) -> float:
        return self.a * math.floor((x + self.shift) / self.modulus)


Form = Union[Constant, Linear, ScaledFloor]

_FORM_NAMES = {Constant: "constant", Linear: "linear", ScaledFloor: "scaled_floor"}


class TetheringError(ValueError):
    pass


@dataclass(frozen=True)
class Tethering:
    """Piecewise lower bound f(x) on |N_r(v)|, defined on [1, inf).

    ``pieces`` is a list of (start, form); the first start is 1 and each piece
    runs until the next start.
    """

    pieces: tuple[tuple[float, Form], ...]

    def __post_init__(self):
        if not self.pieces:
            raise TetheringError("tethering needs at least one piece")
        starts = [s for s, _ in self.pieces]
        if starts[0] != 1:
            raise TetheringError("first piece must start at 1")
        if any(b <= a for a, b in zip(starts, starts[1:])):
            raise TetheringError("piece starts must be strictly increasing")
        for _, form in self.pieces:
            if type(form) not in _FORM_NAMES:
                raise TetheringError(f"unsupported piece form {form!r}")
            if isinstance(form, ScaledFloor):
                if form.a <= 0 or form.modulus < 1 or int(form.modulus) != form.modulus:
                    raise TetheringError("scaled_floor needs a > 0 and a positive integer modulus")
            elif (form.c if isinstance(form, Constant) else form.a) <= 0:
                raise TetheringError("constant/linear coefficients must be positive")
        for s, form in self.pieces:
            if form(s) <= 0:
                raise TetheringError(f"tethering is nonpositive at x = {s}")
        self._check_monotone()

    def _check_monotone(self):
        hi = 2 * max(s for s, _ in self.pieces) + 64
        grid = sorted({1 + i / 8 for i in range(int((hi - 1) * 8) + 1)} | {s for s, _ in self.pieces})
        prev = None
        for x in grid:
            y = self(x)
            if prev is not None and y < prev - 1e-12:
                raise TetheringError(f"tethering decreases near x = {x}")
            prev = y

    def piece_at(self, x: float) -> tuple[int, float, float, Form]:
        """(index, start, end, form) of the piece containing x; end may be inf."""
        if x < 1:
            raise ValueError("tethering is defined on [1, inf)")
        for i in range(len(self.pieces) - 1, -1, -1):
            s, form = self.pieces[i]
            if x >= s:
                end = self.pieces[i + 1][0] if i + 1 < len(self.pieces) else math.inf
                return i, s, end, form
        raise AssertionError

    def __call__(self, x: float) -> float:
        return self.piece_at(x)[3](x)

    def to_records(self) -> list[dict]:
        out = []
        for s, form in self.pieces:
            if isinstance(form, Constant):
                params = {"c": form.c}
            elif isinstance(form, Linear):
                params = {"a": form.a}
            else:
                params = {"a": form.a, "shift": form.shift, "modulus": form.modulus}
            out.append({"start": s, "form": _FORM_NAMES[type(form)], "params": params})
        return out

    @classmethod
    def from_records(cls, records: list[dict]) -> "Tethering":
        pieces = []
        for rec in records:
            try:
                kind, p = rec["form"], rec.get("params", {})
                if kind == "constant":
                    form: Form = Constant(p["c"])
                elif kind == "linear":
                    form = Linear(p["a"])
                elif kind == "scaled_floor":
                    form = ScaledFloor(p["a"], p.get("shift", 0), p["modulus"])
                else:
                    raise TetheringError(f"unknown form {kind!r}")
                pieces.append((rec["start"], form))
            except KeyError as exc:
                raise TetheringError(f"tethering record missing {exc}") from None
        return cls(tuple(pieces))


def trianglefree_preset(d: int) -> Tethering:
    """d+1 on [1, 2), then (d^2+1) * floor((x+3)/5).

    The x >= 2 part counts d^2+1 vertices around a vertex and around one
    vertex in every fifth distance layer. That count needs two distinct
    middle vertices never to share an outer neighbor, so it is only
    guaranteed when the graph has no 3- or 4-cycles; K_{d,d} breaks it at r=2.
    """
    if d < 1:
        raise ValueError("d must be positive")
    return Tethering(((1, Constant(d + 1)), (2, ScaledFloor(d * d + 1, 3, 5))))


def linear_preset(h: float) -> Tethering:
    """1 on [1, 2), then h * x."""
    return Tethering(((1, Constant(1)), (2, Linear(h))))


@dataclass(frozen=True)
class TetherBoundReport:
    n: int
    tethering: Tethering
    minimizer: float
    analytic_value: float
    bound: float
    best_r: int
    trace: tuple[tuple[int, float], ...] = field(repr=False)

    @property
    def integer_bound(self) -> int:
        return math.floor(self.bound + 1e-9)


def _g(n: int, t: Tethering, x: float) -> float:
    return n / t(x) + 2 * x


def _piece_minimizer(n: int, t: Tethering, idx: int) -> tuple[float, float]:
    """(x, g(x)) minimizing g over one piece; a half-open right end is replaced by the next start."""
    start, form = t.pieces[idx]
    end = t.pieces[idx + 1][0] if idx + 1 < len(t.pieces) else math.inf
    candidates: list[float] = [start]
    if isinstance(form, Linear):
        x = math.sqrt(n / (2 * form.a))
        candidates.append(min(max(x, start), end))
    elif isinstance(form, ScaledFloor):
        # on each step floor(.) = j is constant, so g rises and the step's left end
        # x = m*j - b wins; in j this is n/(a j) + 2(m j - b), convex
        a, b, m = form.a, form.shift, form.modulus
        j_lo = math.floor((start + b) / m)
        j_star = math.sqrt(n / (2 * a * m))
        js = {j_lo, j_lo + 1, math.floor(j_star), math.floor(j_star) + 1}
        for j in js:
            x = max(m * j - b, start)
            if j >= j_lo and x < end:
                candidates.append(x)
    else:
        pass  # constant: g increases, left end is best
    if end != math.inf:
        candidates.append(end)
    best = min(candidates, key=lambda x: (_g(n, t, x), x))
    return best, _g(n, t, best)


def tether_bound(n: int, t: Tethering) -> TetherBoundReport:
    """Vertex-count-only upper bound on b(G) for graphs obeying tethering t.

    The continuous minimizer m of g(x) = n/f(x) + 2x gives the bound
    max(ceil(m), min(g(floor m), g(ceil m))). Every integer r >= 1 also gives
    a valid bound g(r) (if rad <= r-1 a center burns in rad+1 <= r <= g(r)
    rounds), so integers up to the first R with 2R > g(1) are scanned and the
    smaller value is returned.
    """
    if n < 1:
        raise ValueError("n must be positive")
    best_x, best_val = None, math.inf
    for idx in range(len(t.pieces)):
        x, val = _piece_minimizer(n, t, idx)
        if val < best_val - 1e-12 or (abs(val - best_val) <= 1e-12 and x < best_x):
            best_x, best_val = x, val
    m = best_x
    lo, hi = math.floor(m), math.ceil(m)
    analytic_value = max(hi, min(_g(n, t, lo), _g(n, t, hi)))
    g1 = _g(n, t, 1)
    R = math.floor(g1 / 2) + 1
    trace = []
    for r in range(1, R + 1):
        f = t(r)
        if f <= 0:
            raise TetheringError(f"tethering nonpositive at r = {r}")
        trace.append((r, n / f + 2 * r))
    best_r, scan_min = min(trace, key=lambda p: (p[1], p[0]))
    return TetherBoundReport(n, t, m, analytic_value, min(analytic_value, scan_min), best_r, tuple(trace))


def verify_tethering(g: Graph, t: Tethering) -> tuple[bool, tuple[int, int] | None]:
    """Check |N_r(v)| >= t(r) for all v and r = 1..rad(G); returns the first (v, r) violation."""
    _, rad, _ = eccentricity_radius(g)
    dist = g.distance_matrix
    for v in range(g.n):
        counts = [0] * (rad + 1)
        for d in dist[v]:
            if d <= rad:
                counts[d] += 1
        size = counts[0]
        for r in range(1, rad + 1):
            size += counts[r]
            if size < t(r):
                return False, (v, r)
    return True, None


# -- closed-form criteria ----------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """``holds`` is True (certified), False (checked, not certified) or None (criterion does not apply)."""

    holds: bool | None
    branch: str
    detail: str


def caterpillar_condition(n: int, min_degree: int) -> bool:
    """min_degree > (n-1)/3 - 1, evaluated exactly."""
    return 3 * min_degree > n - 4


def trianglefree_wellburnable(n: int, d: int) -> Verdict:
    """Whether every connected triangle-free graph on n vertices with minimum degree d is certified well-burnable."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if caterpillar_condition(n, d):
        return Verdict(True, "caterpillar", f"d = {d} > ({n}-1)/3 - 1: spanning caterpillar exists")
    q = d * d + 1
    if q <= 40:
        return Verdict(None, "inconclusive", f"d^2+1 = {q} <= 40: closed-form bound degenerates")
    # sqrt(n) >= 4 / (1 - sqrt(40/q))
    threshold = 4 / (1 - math.sqrt(40 / q))
    if _closed_form_holds(n, q):
        return Verdict(True, "closed-form",
                       f"sqrt({n}) = {math.sqrt(n):.4f} >= 4/(1 - sqrt(40/{q})) = {threshold:.4f}")
    rep = tether_bound(n, trianglefree_preset(d))
    target = ceil_sqrt(n)
    if rep.integer_bound <= target:
        return Verdict(True, "tether-scan",
                       f"integer scan bound {rep.bound:.4f} at r = {rep.best_r} <= ceil(sqrt({n})) = {target}")
    return Verdict(False, "not-certified",
                   f"sqrt({n}) < {threshold:.4f} and scan bound {rep.bound:.4f} > {target}")


def _closed_form_holds(n: int, q: int) -> bool:
    """2*sqrt(10 n / q) + 4 <= sqrt(n) without rounding error.

    Equivalent to sqrt(n) - 4 >= sqrt(40 n / q), i.e. n >= 16 and
    n + 16 - 40 n / q >= 8 sqrt(n).
    """
    if n < 16:
        return False
    lhs = Fraction(n) + 16 - Fraction(40 * n, q)
    return lhs >= 0 and lhs * lhs >= 64 * n


def linear_threshold(h: float | Fraction | int) -> int | None:
    """Least n with n >= 8h and sqrt(n) >= 2 / (1 - sqrt(8/h)); None when h <= 8."""
    h = Fraction(h)
    if h <= 8:
        return None
    s2 = Fraction(8) / h  # square of sqrt(8/h)
    # (2/(1-s))^2 = 4 (1+s)^2 / (1-s^2)^2 = A + B s  with s = sqrt(s2)
    denom = (1 - s2) ** 2
    A = 4 * (1 + s2) / denom
    B = 8 / denom
    n_root = ceil_int_plus_sqrt(A, B * B * s2)
    return max(n_root, _ceil_fraction(8 * h))


def linear_condition(n: int, h: float | Fraction | int) -> bool:
    """Exact test of n >= 8h and sqrt(n) >= 2 / (1 - sqrt(8/h))."""
    h = Fraction(h)
    if h <= 8 or n < 8 * h:
        return False
    # sqrt(n)(1 - s) >= 2  <=>  sqrt(n) - 2 >= sqrt(8n/h)  <=>  n + 4 - 8n/h >= 4 sqrt(n)
    lhs = Fraction(n) + 4 - 8 * Fraction(n) / h
    return sqrt_at_least(n, 2) and lhs >= 0 and lhs * lhs >= 16 * n


def linear_threshold_scan(h: float | Fraction | int) -> int | None:
    """Same value as :func:`linear_threshold`, found by testing n = 1, 2, ..."""
    if Fraction(h) <= 8:
        return None
    n = 1
    while not linear_condition(n, h):
        n += 1
    return n


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)

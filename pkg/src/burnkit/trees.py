"""Degree-statistic tests that certify a tree is well-burnable.

All arithmetic is exact: concentrations are Fractions and every ceiling of a
square root goes through integer square roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graph import Graph
from .intmath import ceil_sqrt


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    counts: Mapping[int, int]

    def __post_init__(self):
        if any(k < 1 or c < 0 for k, c in self.counts.items()):
            raise ProfileError("degrees must be >= 1 and counts >= 0")
        object.__setattr__(self, "counts", {k: c for k, c in sorted(self.counts.items()) if c})
        if sum(self.counts.values()) != self.n:
            raise ProfileError(f"degree counts sum to {sum(self.counts.values())}, not n = {self.n}")
        expected = 2 + sum((k - 1) * c for k, c in self.counts.items() if k >= 2)
        if self.n != expected:
            raise ProfileError(f"n = {self.n} but 2 + sum (k-1) n_k = {expected}; not a tree degree sequence")

    @classmethod
    def from_nonleaf_counts(cls, nonleaf: Mapping[int, int], leaves: int | None = None) -> "DegreeProfile":
        """Build from counts of degree >= 2; the leaf count follows from n = 2 + sum (k-1) n_k."""
        if any(k < 2 for k in nonleaf):
            raise ProfileError("non-leaf histogram must only use degrees >= 2")
        n = 2 + sum((k - 1) * c for k, c in nonleaf.items())
        n1 = n - sum(nonleaf.values())
        if leaves is not None and leaves != n1:
            raise ProfileError(f"{leaves} leaves given but the degree sum forces {n1}")
        counts = dict(nonleaf)
        counts[1] = n1
        return cls(n, counts)

    @property
    def n_prime(self) -> int:
        return sum(c for k, c in self.counts.items() if k >= 2)

    def n_k(self, k: int) -> int:
        return self.counts.get(k, 0)

    @property
    def concentrations(self) -> dict[int, Fraction]:
        np_ = self.n_prime
        if np_ == 0:
            return {}
        return {k: Fraction(c, np_) for k, c in self.counts.items() if k >= 2}

    @property
    def p(self) -> Fraction | None:
        """Share of non-leaf vertices with degree 2."""
        np_ = self.n_prime
        return Fraction(self.n_k(2), np_) if np_ else None

    @property
    def min_nonleaf_degree(self) -> int | None:
        ks = [k for k in self.counts if k >= 2]
        return min(ks) if ks else None

    def histogram(self) -> list[list[int]]:
        return [[k, c] for k, c in self.counts.items()]


def profile(g: Graph) -> DegreeProfile:
    if g.n < 2 or not g.is_tree():
        raise ProfileError("profile needs a tree on at least 2 vertices")
    counts: dict[int, int] = {}
    for d in g.degrees():
        counts[d] = counts.get(d, 0) + 1
    return DegreeProfile(g.n, counts)


def thm41_sides(dp: DegreeProfile) -> tuple[int, int]:
    """(ceil(2 sqrt(n'/3)) + 2, ceil(sqrt(2 + n_2 + 2 n_3 + ...)))."""
    np_ = dp.n_prime
    lhs = ceil_sqrt(Fraction(4 * np_, 3)) + 2
    rhs = ceil_sqrt(2 + sum((k - 1) * c for k, c in dp.counts.items() if k >= 2))
    return lhs, rhs


def thm41_predicate(dp: DegreeProfile) -> bool:
    """True certifies well-burnable; False says nothing."""
    if dp.n_prime == 0:
        raise ProfileError("predicate undefined for trees without non-leaf vertices")
    lhs, rhs = thm41_sides(dp)
    return lhs <= rhs


def nonleaf_upper_bound(n: int, d: int) -> int:
    """Largest possible non-leaf count of an n-vertex tree with non-leaf degrees >= d."""
    return max(0, (n - 2) // (d - 1))


def thm42_sides(n: int, d: int) -> tuple[int, int]:
    q = nonleaf_upper_bound(n, d)
    return ceil_sqrt(Fraction(4 * q, 3)) + 2, ceil_sqrt(n)


def thm42_predicate(n: int, d: int) -> bool:
    """ceil(2 sqrt(floor((n-2)/(d-1)) / 3)) + 2 <= ceil(sqrt(n))."""
    if d < 2:
        raise ValueError("d must be at least 2")
    lhs, rhs = thm42_sides(n, d)
    return lhs <= rhs


def thm43_sufficient(n_prime: int, p: Fraction) -> bool:
    """2 sqrt(n'/3) + 3 <= sqrt(2 + (2-p) n'), exactly.

    Squaring: with L = 2 + (2-p) n' - 4n'/3 - 9 this is L >= 0 and L^2 >= 48 n'.
    """
    L = 2 + (2 - p) * n_prime - Fraction(4 * n_prime, 3) - 9
    return L >= 0 and L * L >= 48 * n_prime


def thm43_ceiling(n_prime: int, p: Fraction) -> bool:
    """ceil(2 sqrt(n'/3)) + 2 <= ceil(sqrt(2 + (p + 2(1-p)) n'))."""
    return ceil_sqrt(Fraction(4 * n_prime, 3)) + 2 <= ceil_sqrt(2 + (2 - p) * n_prime)


def thm43_threshold(p: Fraction | int | str) -> int | None:
    """Least N with the sufficient inequality holding at every n' >= N; None if p >= 2/3.

    With c = 2/3 - p the inequality reads c n' - 7 >= 0 and
    c^2 n'^2 - (14c + 48) n' + 49 >= 0; both hold exactly from the larger
    root of the quadratic onwards, so the first n' that satisfies it is the
    threshold.
    """
    p = Fraction(p)
    if p < 0 or p > 1:
        raise ValueError("p must lie in [0, 1]")
    if p >= Fraction(2, 3):
        return None
    c = Fraction(2, 3) - p
    # start just below the larger root, estimated in floating point
    b = 14 * c + 48
    disc = float(b * b - 4 * c * c * 49)
    root = (float(b) + disc ** 0.5) / (2 * float(c * c))
    n = max(1, int(root) - 2)
    while n > 1 and thm43_sufficient(n - 1, p):
        n -= 1
    while not thm43_sufficient(n, p):
        n += 1
    return n


def thm44_sum(dp: DegreeProfile) -> Fraction:
    return sum(((k - 3) * pk for k, pk in dp.concentrations.items() if k >= 4), Fraction(0))


def thm44_predicate(dp: DegreeProfile) -> bool:
    """p_4 + 2 p_5 + 3 p_6 + ... > 1/3 (well-burnable once n' is large enough)."""
    return thm44_sum(dp) > Fraction(1, 3)


def thm44_k_variant(k: int, concentration: Fraction | int | str) -> bool:
    """Share of non-leaf vertices with degree >= k exceeds 1/(3(k-3))."""
    if k < 4:
        raise ValueError("k must be at least 4")
    return Fraction(concentration) > Fraction(1, 3 * (k - 3))


def at_least_concentration(dp: DegreeProfile, k: int) -> Fraction:
    np_ = dp.n_prime
    return Fraction(sum(c for j, c in dp.counts.items() if j >= k), np_) if np_ else Fraction(0)

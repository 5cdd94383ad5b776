"""Exact ceiling square roots and square-root comparisons over integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def ceil_sqrt(x: int | Fraction) -> int:
    """Smallest integer t >= 0 with t*t >= x."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("ceil_sqrt of a negative number")
    if x.denominator == 1:
        n = x.numerator
        t = isqrt(n)
        return t if t * t == n else t + 1
    # t*t >= p/q  <=>  t*t*q >= p
    p, q = x.numerator, x.denominator
    t = isqrt(p // q)
    while t * t * q < p:
        t += 1
    return t


def sqrt_at_least(x: int | Fraction, c: int | Fraction) -> bool:
    """Decide sqrt(x) >= c exactly."""
    x, c = Fraction(x), Fraction(c)
    return c <= 0 or x >= c * c


def ceil_int_plus_sqrt(a: Fraction, x: Fraction) -> int:
    """Smallest integer N with N >= a + sqrt(x), for rational a and x >= 0."""
    a, x = Fraction(a), Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    # start below the answer, then walk up
    base = a.numerator // a.denominator + isqrt(x.numerator // x.denominator)
    n = base - 1
    while not (n >= a and (n - a) * (n - a) >= x):
        n += 1
    return n

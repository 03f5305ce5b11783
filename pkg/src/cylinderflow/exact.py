"""Exact rational foundations: circle arithmetic and rigorous intervals.

Everything is built on `fractions.Fraction`, which normalizes eagerly
(positive denominator, lowest terms), so equality is structural.  There is
no floating-point fast path anywhere in this module; rigorous enclosures of
irrational quantities are pairs of exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Union

from .errors import NotCoprime

Q = Fraction
Rational = Union[int, Fraction]

HALF = Q(1, 2)


def as_fraction(x: Rational | str) -> Fraction:
    """Coerce ints, Fractions and 'num/den' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def floor_part(x: Rational) -> int:
    x = as_fraction(x)
    return x.numerator // x.denominator


def frac_part(x: Rational) -> Fraction:
    x = as_fraction(x)
    return x - floor_part(x)


def on_circle(x: Rational) -> Fraction:
    """Reduce modulo 1 into [0, 1).  Circle points are plain Fractions
    kept in this canonical range."""
    return frac_part(x)


def nearest_int_distance(x: Rational) -> Fraction:
    """Distance from x to the closest integer: min({x}, 1 - {x}).

    Always in [0, 1/2]."""
    f = frac_part(x)
    return f if f <= HALF else 1 - f


def circle_distance(x: Rational, y: Rational) -> Fraction:
    """Induced distance on the circle; symmetric, triangle inequality."""
    return nearest_int_distance(as_fraction(x) - as_fraction(y))


def distance_to_set(x: Rational, points: Iterable[Rational]) -> Fraction:
    """min over p in points of the circle distance d(x, p)."""
    return min(circle_distance(x, p) for p in points)


def mod_inverse(a: int, m: int) -> int:
    """u in [1, m) with a*u = 1 (mod m).  Raises NotCoprime otherwise."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    if gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    u = pow(a % m, -1, m)
    return u if u != 0 else m  # m = 1 edge: pow gives 0, report 1-based rep


def rational_to_json(x: Rational) -> dict:
    x = as_fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def rational_str(x: Rational) -> str:
    """Canonical 'num/den' text form (den printed even when 1)."""
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints.

    Arithmetic is exact, hence automatically outward-directed: the result
    interval contains op(i, j) for every i in I, j in J.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @staticmethod
    def point(x: Rational) -> "RationalInterval":
        x = as_fraction(x)
        return RationalInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Rational) -> bool:
        x = as_fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersect(self, other: "RationalInterval") -> "RationalInterval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("intervals do not intersect")
        return RationalInterval(lo, hi)

    def __add__(self, other):
        other = _as_interval(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) + (-self)

    def __mul__(self, other):
        other = _as_interval(other)
        products = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return RationalInterval(min(products), max(products))

    def __rmul__(self, other):
        return self.__mul__(other)

    def nearest_int_distance_image(self) -> "RationalInterval":
        """Exact image of [lo, hi] under t -> ||t|| (distance to Z).

        The map is piecewise linear with minima 0 at integers and maxima
        1/2 at half-integers, so extrema over an interval occur either at
        endpoints or at those lattice points."""
        if self.width >= 1:
            return RationalInterval(0, HALF)
        a = self.lo - floor_part(self.lo)  # shift into [0, 1); hi follows
        b = a + self.width  # b < 2
        fa = a if a <= HALF else 1 - a
        fb = nearest_int_distance(b)
        lo = min(fa, fb)
        hi = max(fa, fb)
        if a == 0 or (a <= 1 <= b):
            lo = Q(0)
        if (a <= HALF <= b) or (a <= Q(3, 2) <= b):
            hi = HALF
        return RationalInterval(lo, hi)

    def to_json(self) -> dict:
        return {"lo": rational_to_json(self.lo), "hi": rational_to_json(self.hi)}

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _as_interval(x) -> RationalInterval:
    if isinstance(x, RationalInterval):
        return x
    return RationalInterval.point(as_fraction(x))


def sqrt_interval(x: "RationalInterval | Rational", bits: int = 64) -> RationalInterval:
    """Rigorous enclosure of sqrt over a nonnegative interval.

    Uses integer square roots on scaled numerators, outward rounded to
    about 2^-bits relative precision."""
    iv = _as_interval(x)
    if iv.lo < 0:
        raise ValueError("sqrt of negative interval")
    scale = 1 << bits

    def lower(v: Fraction) -> Fraction:
        if v == 0:
            return Q(0)
        s = isqrt(v.numerator * v.denominator * scale * scale)
        return Q(s, v.denominator * scale)

    def upper(v: Fraction) -> Fraction:
        if v == 0:
            return Q(0)
        s = isqrt(v.numerator * v.denominator * scale * scale)
        return Q(s + 1, v.denominator * scale)

    return RationalInterval(lower(iv.lo), upper(iv.hi))


def exp_neg_interval(t: Rational, min_terms: int = 24) -> RationalInterval:
    """Rigorous enclosure of exp(-t) for rational t >= 0.

    Alternating Taylor series: once terms decrease monotonically the
    partial sums bracket the limit."""
    t = as_fraction(t)
    if t < 0:
        raise ValueError("exp_neg_interval requires t >= 0")
    if t == 0:
        return RationalInterval.point(1)
    if t > 64:
        raise ValueError("argument too large for series enclosure")
    term = Q(1)
    partial = Q(1)
    k = 0
    lo = hi = None
    tiny = Q(1, 1 << 80)
    while True:
        k += 1
        term = term * t / k
        partial = partial - term if k % 2 == 1 else partial + term
        if k >= max(min_terms, 2 * floor_part(t) + 4) and term < tiny:
            # k-th term added; consecutive partials bracket the limit
            if k % 2 == 1:
                lo, hi = partial, partial + term * t / (k + 1)
            else:
                lo, hi = partial - term * t / (k + 1), partial
            break
    return RationalInterval(max(lo, Q(0)), hi)


# pi to 38 decimal places; truncation makes lo strict, +1 ulp covers the rest.
_PI_LO = Q(314159265358979323846264338327950288419, 10**38)


def pi_interval() -> RationalInterval:
    """Rigorous rational enclosure of pi (width 1e-38)."""
    return RationalInterval(_PI_LO, _PI_LO + Q(1, 10**38))

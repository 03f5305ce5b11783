"""Continued-fraction engine.

Partial quotients (eventually periodic, so quadratic surds are exact),
convergents p_n/q_n, continuants K(a_1..a_n), rigorous enclosures of alpha
and ||q alpha||, and exact orbit-gap computation for density checks.

An irrational alpha is represented exclusively by its PartialQuotients;
every real-valued query returns a RationalInterval obtained by sandwiching
alpha between consecutive deep convergents, with a tunable `slack` knob.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .errors import DepthExceedsExpansion, EnclosureTooWide
from .exact import Q, RationalInterval, as_fraction, frac_part, nearest_int_distance

Alpha = Union[Fraction, "Convergent", "PartialQuotients"]


@dataclass(frozen=True)
class PartialQuotients:
    """Continued fraction expansion [a0; a1, a2, ...].

    `head` lists a0, a1, ... explicitly; `periodic_tail`, when present,
    repeats forever after the head (so the number is a quadratic surd).
    Without a tail the expansion is finite and the number is rational.
    """

    head: tuple
    periodic_tail: Optional[tuple] = None

    def __post_init__(self):
        head = tuple(int(a) for a in self.head)
        if not head:
            raise ValueError("head must contain at least a0")
        if any(a < 1 for a in head[1:]):
            raise ValueError("partial quotients a1, a2, ... must be >= 1")
        tail = self.periodic_tail
        if tail is not None:
            tail = tuple(int(a) for a in tail)
            if not tail:
                raise ValueError("periodic tail, when given, must be nonempty")
            if any(a < 1 for a in tail):
                raise ValueError("periodic tail entries must be >= 1")
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "periodic_tail", tail)

    @property
    def is_rational(self) -> bool:
        return self.periodic_tail is None

    @property
    def max_index(self) -> Optional[int]:
        """Largest valid quotient index, or None for infinite expansions."""
        return len(self.head) - 1 if self.is_rational else None

    def quotient(self, i: int) -> int:
        if i < 0:
            raise ValueError("quotient index must be >= 0")
        if i < len(self.head):
            return self.head[i]
        if self.periodic_tail is None:
            raise DepthExceedsExpansion(
                f"index {i} beyond finite expansion of length {len(self.head)}"
            )
        return self.periodic_tail[(i - len(self.head)) % len(self.periodic_tail)]

    def quotients(self, depth: int) -> list:
        """a_0 .. a_depth as a list."""
        return [self.quotient(i) for i in range(depth + 1)]

    def value(self) -> Fraction:
        """Exact value of a finite (rational) expansion."""
        if not self.is_rational:
            raise DepthExceedsExpansion("irrational expansion has no exact value")
        cs = convergents(self, len(self.head) - 1)
        return cs[-1].value

    def to_json(self) -> dict:
        return {
            "head": list(self.head),
            "periodic_tail": list(self.periodic_tail) if self.periodic_tail else None,
        }

    @staticmethod
    def from_json(obj: dict) -> "PartialQuotients":
        tail = obj.get("periodic_tail")
        return PartialQuotients(tuple(obj["head"]), tuple(tail) if tail else None)


def golden() -> PartialQuotients:
    """(sqrt(5) - 1) / 2 = [0; 1, 1, 1, ...]."""
    return PartialQuotients((0,), (1,))


def schmidt() -> PartialQuotients:
    """(sqrt(5) - 1) / 4 = [0; 3, 4, 4, 4, ...]."""
    return PartialQuotients((0, 3), (4,))


PRESETS = {"golden": golden, "schmidt": schmidt}


def resolve_alpha(spec) -> PartialQuotients:
    """Accepts a preset name, a JSON dict, or PartialQuotients."""
    if isinstance(spec, PartialQuotients):
        return spec
    if isinstance(spec, str):
        if spec in PRESETS:
            return PRESETS[spec]()
        raise ValueError(f"unknown alpha preset {spec!r}")
    if isinstance(spec, dict):
        return PartialQuotients.from_json(spec)
    raise ValueError(f"cannot interpret alpha spec {spec!r}")


@dataclass(frozen=True)
class Convergent:
    """Exact convergent p_n/q_n with its index."""

    index: int
    p: int
    q: int

    def __post_init__(self):
        if self.q <= 0:
            raise ValueError("continuant must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError("convergent not in lowest terms")

    @property
    def value(self) -> Fraction:
        return Q(self.p, self.q)


def convergents(pq: PartialQuotients, depth: int) -> list:
    """Convergents up to `depth` via p_n = a_n p_{n-1} + p_{n-2},
    q_n = a_n q_{n-1} + q_{n-2}, seeded p_-1 = 1, q_-1 = 0."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    out = []
    p_prev, q_prev = 1, 0
    p_cur, q_cur = pq.quotient(0), 1
    out.append(Convergent(0, p_cur, q_cur))
    for n in range(1, depth + 1):
        a = pq.quotient(n)
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        out.append(Convergent(n, p_cur, q_cur))
    return out


def continuant(a: Sequence[int]) -> int:
    """K() = 1, K(a1) = a1, K(a1..an) = an*K(a1..a_{n-1}) + K(a1..a_{n-2})."""
    if any(x < 1 for x in a):
        raise ValueError("continuant entries must be >= 1")
    km2, km1 = 0, 1  # K of prefixes of length -1 (conventionally 0) and 0
    for x in a:
        km2, km1 = km1, x * km1 + km2
    return km1


def alpha_interval(pq: PartialQuotients, depth: int) -> RationalInterval:
    """Enclosure of alpha: exact point if rational and depth suffices,
    otherwise the interval between convergents at `depth` and `depth`+1."""
    if pq.is_rational:
        return RationalInterval.point(pq.value())
    cs = convergents(pq, depth + 1)
    a, b = cs[depth].value, cs[depth + 1].value
    return RationalInterval(min(a, b), max(a, b))


@dataclass(frozen=True)
class NormEnclosure:
    """Rigorous enclosure of ||q_n alpha|| together with its continuant."""

    index: int
    q: int
    value: RationalInterval

    @property
    def lo(self) -> Fraction:
        return self.value.lo

    @property
    def hi(self) -> Fraction:
        return self.value.hi


def norm_enclosure(pq: PartialQuotients, n: int, slack: int = 8) -> NormEnclosure:
    """Enclose ||q_n alpha||.

    For rational alpha the value is exact (requires n < final index so it
    is nonzero).  For irrational alpha the enclosure multiplies a deep
    sandwich of alpha by q_n and intersects with the classical window
    1/(q_{n+1} + q_n) <= ||q_n alpha|| <= 1/q_{n+1}; widening `slack`
    shrinks the result monotonically.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if pq.is_rational:
        last = pq.max_index
        if n >= last:
            raise DepthExceedsExpansion(
                f"||q_n alpha|| vanishes at the final index {last} of a rational alpha"
            )
        cs = convergents(pq, last)
        val = nearest_int_distance(cs[n].q * cs[last].value)
        return NormEnclosure(n, cs[n].q, RationalInterval.point(val))
    depth = n + 1 + slack
    cs = convergents(pq, depth + 1)
    q_n = cs[n].q
    iv = (q_n * alpha_interval(pq, depth)).nearest_int_distance_image()
    if n >= 1:
        window = RationalInterval(Q(1, cs[n + 1].q + q_n), Q(1, cs[n + 1].q))
        iv = iv.intersect(window)
    if iv.lo <= 0:
        raise EnclosureTooWide(f"cannot separate ||q_{n} alpha|| from 0")
    return NormEnclosure(n, q_n, iv)


# ---------------------------------------------------------------------------
# Orbit gaps (three-distance theorem)
# ---------------------------------------------------------------------------


def one_sided_minima(p: int, q: int, m: int):
    """Exact one-sided minima of the rotation orbit j*p/q, 1 <= j <= m < q.

    Returns (dpos, jpos, dneg, jneg) where dpos/q = min_j {j p/q} attained
    at j = jpos, and dneg/q = min_j (1 - {j p/q}) attained at j = jneg.
    Walks the continued-fraction ladder of p/q, so it costs O(depth) big-int
    operations regardless of m.
    """
    if not (0 < p < q) or gcd(p, q) != 1:
        raise ValueError("need 0 < p < q with gcd(p, q) = 1")
    if not (1 <= m < q):
        raise ValueError("need 1 <= m < q")
    # Euclid remainders r_{k-1}, r_k equal |q_k p - p_k q|; denominators d_k.
    r_prev, r_cur = q, p
    d_prev, d_cur = 0, 1
    k = 0
    best_pos = None  # (numerator over q, j)
    best_neg = None
    while r_cur > 0 and d_prev <= m:
        a_next = r_prev // r_cur
        t_lo = 0 if k >= 1 else 1
        t_cap = (m - d_prev) // d_cur
        t_use = min(a_next, t_cap)
        if t_use >= t_lo:
            val = r_prev - t_use * r_cur
            j = d_prev + t_use * d_cur
            if val > 0 and j >= 1:
                cand = (val, j)
                if k % 2 == 0:  # approaches from above: negative side
                    if best_neg is None or cand[0] < best_neg[0]:
                        best_neg = cand
                else:
                    if best_pos is None or cand[0] < best_pos[0]:
                        best_pos = cand
        r_prev, r_cur = r_cur, r_prev - a_next * r_cur
        d_prev, d_cur = d_cur, a_next * d_cur + d_prev
        k += 1
    assert best_pos is not None and best_neg is not None
    return best_pos[0], best_pos[1], best_neg[0], best_neg[1]


def orbit_gap_multiset(p: int, q: int, count: int) -> dict:
    """Exact gap multiset of {alpha, 2 alpha, ..., count*alpha} on the circle
    for alpha = p/q, as {gap: multiplicity}.  Closed form via one-sided
    minima: with N points the gaps are a (mult N - jpos), b (mult N - jneg)
    and a+b (mult jpos + jneg - N)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    p %= q
    if p == 0:
        return {Q(1): 1}  # every multiple is 0: a single point, one full gap
    g = gcd(p, q)
    p, q = p // g, q // g
    if count >= q:
        return {Q(1, q): q}
    if count == 1:
        return {Q(1): 1}
    dpos, jpos, dneg, jneg = one_sided_minima(p, q, count - 1)
    a, b = Q(dpos, q), Q(dneg, q)
    gaps = {}
    for val, mult in ((a, count - jpos), (b, count - jneg), (a + b, jpos + jneg - count)):
        if mult > 0:
            gaps[val] = gaps.get(val, 0) + mult
    total = sum(v * m for v, m in gaps.items())
    assert total == 1, "gap multiset failed the total-length identity"
    return gaps


def orbit_gap_multiset_bruteforce(p: int, q: int, count: int) -> dict:
    """Sort-based oracle for orbit_gap_multiset (moderate counts only)."""
    pts = sorted(set((k * p) % q for k in range(1, count + 1)))
    gaps = {}
    for i, x in enumerate(pts):
        nxt = pts[(i + 1) % len(pts)] + (q if i + 1 == len(pts) else 0)
        g = Q(nxt - x, q)
        gaps[g] = gaps.get(g, 0) + 1
    return gaps


def orbit_density_gap(alpha: Alpha, count: int, max_slack: int = 64) -> Fraction:
    """Largest gap between the circularly sorted points {alpha, ..., K alpha}.

    The set is delta-dense iff the returned max gap is <= 2*delta.  An
    irrational alpha is replaced by a convergent deep enough that the
    perturbation cannot change the answer; EnclosureTooWide if no such
    depth is reachable within max_slack extra levels.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if isinstance(alpha, Convergent):
        alpha = alpha.value
    if isinstance(alpha, PartialQuotients) and alpha.is_rational:
        alpha = alpha.value
    if isinstance(alpha, (Fraction, int)):
        alpha = as_fraction(alpha)
        return max(orbit_gap_multiset(alpha.numerator, alpha.denominator, count))
    # irrational: deepen until the proxy gap is certified
    pq = alpha
    depth = 4
    while depth <= max_slack + 4:
        cs = convergents(pq, depth + 1)
        qd = cs[depth].q
        if qd > count:
            delta_hi = Q(1, qd * cs[depth + 1].q)  # |alpha - p_d/q_d| bound
            gap = max(orbit_gap_multiset(cs[depth].p % qd, qd, count))
            # each point moves by at most count*delta, gaps by twice that
            drift = 2 * count * delta_hi
            if drift < gap / 4:
                return gap
        depth *= 2
    raise EnclosureTooWide("convergent depth cannot certify the orbit gaps")


def orbit_density_gap_enclosure(alpha: Alpha, count: int, max_slack: int = 64) -> RationalInterval:
    """Enclosure of the true max gap for irrational alpha (exact point for
    rational), accounting for the proxy-orbit drift."""
    if isinstance(alpha, PartialQuotients) and not alpha.is_rational:
        pq = alpha
        depth = 4
        while depth <= max_slack + 4:
            cs = convergents(pq, depth + 1)
            qd = cs[depth].q
            if qd > count:
                delta_hi = Q(1, qd * cs[depth + 1].q)
                gap = max(orbit_gap_multiset(cs[depth].p % qd, qd, count))
                drift = 2 * count * delta_hi
                if drift < gap / 4:
                    return RationalInterval(max(gap - drift, Q(0)), gap + drift)
            depth *= 2
        raise EnclosureTooWide("convergent depth cannot certify the orbit gaps")
    return RationalInterval.point(orbit_density_gap(alpha, count, max_slack))

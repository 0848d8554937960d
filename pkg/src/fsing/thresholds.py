"""Splitting-number sequences and threshold brackets for pairs.

nu(q) is the largest N with a^N * (I^[q] : I) escaping m^[q] at a designated
rational maximal ideal m, with q = p^e.  Containment in m^[q] is a cheap
combinatorial test: translate m to the origin, then membership just asks
every term to carry some exponent >= q.  Since a sits inside m, any product
of n(q-1)+1 generators lands in m^[q] by pigeonhole, so nu(q) <= n(q-1) and
a binary search over that window is exact.

The bracket returned for the threshold is

    [ nu(q*)/q*, (nu(q*)+1)/q* ],   q* = p^(e_max),

whose lower endpoint is also max_e nu(p^e)/p^e (the nu's are
supermultiplicative, so nu(q)/q is nondecreasing).  For principal a,
(nu(q)+1)/q is nonincreasing in e and the upper endpoint is a certified
threshold bound of width 1/q*.  For non-principal a the upper endpoint is
the standard depth-e_max proxy and the true threshold may exceed it; exact
sharp-threshold detection at denominators q-1 goes through is_sharp_at.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError
from .groebner import Ideal, RingPresentation, bracket_colon
from .criteria import PairSpec, in_maximal_bracket, point_from_maximal
from .ringcore import prime_power


@dataclass(frozen=True)
class NuSequence:
    """Recorded nu values; construction asserts supermultiplicativity
    nu(p^(e+1)) >= p * nu(p^e) across consecutive records."""

    presentation: RingPresentation
    a: Ideal
    m: Ideal
    entries: tuple  # of (e, q, nu)

    def __post_init__(self):
        p = self.presentation.p
        for (e1, _, n1), (e2, _, n2) in zip(self.entries, self.entries[1:]):
            if e2 == e1 + 1 and n2 < p * n1:
                raise ContractError(
                    f"supermultiplicativity violated: nu(p^{e2}) = {n2} < "
                    f"{p} * nu(p^{e1}) = {p * n1}; is R F-pure at m?"
                )

    def nu(self, e: int) -> int:
        for entry_e, _, n in self.entries:
            if entry_e == e:
                return n
        raise KeyError(e)


def _ideal_power_gens(a: Ideal, N: int, cache: dict):
    """Generators of a^N, grown incrementally and cached per N."""
    if N in cache:
        return cache[N]
    if N == 0:
        result = (a.ring.one(),)
    else:
        prev = _ideal_power_gens(a, N - 1, cache)
        seen = set()
        result = []
        for g in prev:
            for h in a.generators:
                f = g * h
                if f.is_zero() or f in seen:
                    continue
                seen.add(f)
                result.append(f)
        result = tuple(result)
    cache[N] = result
    return result


def nu_value(presentation: RingPresentation, a: Ideal, m: Ideal, e: int, _cache=None) -> int:
    """Largest N with a^N * (I^[p^e] : I) not inside m^[p^e]; 0 if already
    the carrier ideal alone is contained."""
    point = point_from_maximal(m)
    if not m.contains_ideal(a):
        raise ContractError("a must be contained in m")
    for g in presentation.defining_ideal.generators:
        if g.evaluate(point) != 0:
            raise ContractError("m does not contain the defining ideal")
    q = prime_power(presentation.p, e)
    carrier = bracket_colon(presentation, e)
    cache = _cache if _cache is not None else {}

    def escapes(N: int) -> bool:
        for base in _ideal_power_gens(a, N, cache):
            for g in carrier.generators:
                w = base * g
                if not w.is_zero() and not in_maximal_bracket(w, point, q):
                    return True
        return False

    hi = presentation.ring.nvars * (q - 1)
    if not escapes(0):
        return 0
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if escapes(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def nu_sequence(presentation: RingPresentation, a: Ideal, m: Ideal, e_max: int) -> NuSequence:
    cache: dict = {}
    entries = []
    for e in range(1, e_max + 1):
        q = prime_power(presentation.p, e)
        entries.append((e, q, nu_value(presentation, a, m, e, _cache=cache)))
    return NuSequence(presentation, a, m, tuple(entries))


def fpt_interval(presentation: RingPresentation, a: Ideal, m: Ideal, e_max: int):
    """Threshold bracket [nu(q*)/q*, (nu(q*)+1)/q*] at q* = p^(e_max).

    Lower <= upper always, and the width is exactly 1/q* (at most
    1/p^(e_max) as promised for the regular ambient case).
    """
    if e_max < 1:
        raise ContractError("e_max must be >= 1")
    seq = nu_sequence(presentation, a, m, e_max)
    _, q_star, nu_star = seq.entries[-1]
    lower = Fraction(nu_star, q_star)
    upper = Fraction(nu_star + 1, q_star)
    return lower, upper


def fpt_interval_at_points(presentation: RingPresentation, a: Ideal, points, e_max: int):
    """Per-point brackets plus the aggregate bracket.

    A pair is pure only where every point lets it split, so the aggregate
    threshold over the sampled points is the componentwise minimum.
    """
    from .criteria import maximal_from_point

    per_point = {}
    for coords in points:
        m = maximal_from_point(presentation.ring, tuple(coords))
        per_point[tuple(coords)] = fpt_interval(presentation, a, m, e_max)
    if not per_point:
        raise ContractError("need at least one point")
    lower = min(v[0] for v in per_point.values())
    upper = min(v[1] for v in per_point.values())
    return per_point, (lower, upper)


def is_sharp_at(pair: PairSpec, m: Ideal, e: int) -> bool:
    """Does a^ceil(t(p^e-1)) * (I^[p^e] : I) escape m^[p^e]?  Detects
    threshold values with denominator p^e - 1 exactly."""
    point = point_from_maximal(m)
    q = prime_power(pair.p, e)
    carrier = bracket_colon(pair.presentation, e)
    for base in pair.a_power(e).generators:
        for g in carrier.generators:
            w = base * g
            if not w.is_zero() and not in_maximal_bracket(w, point, q):
                return True
    return False

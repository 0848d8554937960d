"""Frobenius ideal kernels: bracket powers J^[p^e] and p^e-th root ideals
I_e(J), plus composition of splitting data across Frobenius levels.

I_e(J) is the smallest ideal K with J inside K^[p^e].  It is computed
generator by generator, which is correct because bracket powers are ideals:
J lies in K^[p^e] exactly when every generator of J does, so the smallest K
for a sum of principal ideals is the sum of the smallest K's.  For a single
f, write f = sum over 0 <= mu < p^e (componentwise) of g_mu^{p^e} * x^mu;
the monomials x^mu form a basis of S over its subring of p^e-th powers, so
the decomposition is unique, every valid root contains each g_mu, and the
ideal the g_mu generate is itself a valid root.  Coefficients need no root
taking: Frobenius fixes F_p.

Everything here is a pure function of immutable values and freely
parallelizable.  No Groebner bases are needed for the root computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError
from .groebner import Ideal, RingPresentation, bracket_colon
from .ringcore import Polynomial, ceil_threshold_exponent, prime_power


def bracket_power(J: Ideal, e: int) -> Ideal:
    """J^[p^e]: the ideal generated by p^e-th powers of the generators.

    Independent of the generating set: it is the expansion of J along the
    e-th Frobenius, and any two generating sets have the same expansion.
    """
    if e < 1:
        raise ContractError("bracket power needs e >= 1")
    if J.is_zero():
        return Ideal(J.ring, (J.ring.zero(),))
    return Ideal(J.ring, tuple(g.frobenius_power(e) for g in J.generators))


def _root_of_polynomial(f: Polynomial, q: int) -> list[Polynomial]:
    buckets: dict = {}
    for m, c in f.terms.items():
        mu = tuple(v % q for v in m)
        inner = tuple(v // q for v in m)
        buckets.setdefault(mu, {})[inner] = c
    return [Polynomial(f.ring, terms) for _, terms in sorted(buckets.items())]


def frobenius_root(J: Ideal, e: int) -> Ideal:
    """I_e(J): the smallest ideal K with J inside K^[p^e]."""
    if e < 1:
        raise ContractError("Frobenius root needs e >= 1")
    q = prime_power(J.ring.p, e)
    gens = []
    seen = set()
    for g in J.generators:
        for piece in _root_of_polynomial(g, q):
            if piece.is_zero() or piece in seen:
                continue
            seen.add(piece)
            gens.append(piece)
    return Ideal(J.ring, tuple(gens) or (J.ring.zero(),))


@dataclass(frozen=True)
class ComposedSplitting:
    carrier: Polynomial
    a_part: Polynomial
    level: int


def splitting_compose(e, d, data_e, data_d, t, pair) -> ComposedSplitting:
    """Combine level-e and level-d splitting data into level-(e+d) data.

    data_e = (g_e, a_e) with g_e in (I^[p^e] : I) and a_e in a^ceil(t(p^e-1));
    likewise data_d at level d.  The combined multiplier is

        carrier = g_e * g_d^(p^e),    a_part = a_e^(p^d) * a_d.

    Both memberships at level e+d are postconditions and are checked here:
    the carrier lands in (I^[p^(e+d)] : I) because g_d^(p^e) * I^[p^e] =
    (g_d I)^[p^e] sits inside I^[p^(e+d)], and the a-part lands in
    a^ceil(t(p^(e+d)-1)) by the ceiling inequality
    p^d*ceil(t(p^e-1)) + ceil(t(p^d-1)) >= ceil(t(p^(e+d)-1)).
    When e = d and the two inputs coincide (iterating one splitting), the
    two possible composition orders agree.
    """
    if e < 1 or d < 1:
        raise ContractError("levels must be >= 1")
    g_e, a_e = data_e
    g_d, a_d = data_d
    t = Fraction(t)
    presentation = pair.presentation
    p = presentation.p

    _require_membership(g_e, bracket_colon(presentation, e), f"g_e in (I^[p^{e}] : I)")
    _require_membership(g_d, bracket_colon(presentation, d), f"g_d in (I^[p^{d}] : I)")
    _require_membership(a_e, pair.a_power(e), f"a_e in a^ceil(t(p^{e}-1))")
    _require_membership(a_d, pair.a_power(d), f"a_d in a^ceil(t(p^{d}-1))")

    q_e = prime_power(p, e)
    q_d = prime_power(p, d)
    carrier = g_e * g_d**q_e
    a_part = a_e**q_d * a_d
    level = e + d

    _require_membership(
        carrier, bracket_colon(presentation, level), f"composed carrier in (I^[p^{level}] : I)"
    )
    _require_membership(
        a_part, pair.a_power(level), f"composed a-part in a^ceil(t(p^{level}-1))"
    )
    return ComposedSplitting(carrier, a_part, level)


def _require_membership(f: Polynomial, J: Ideal, what: str):
    if not J.contains(f):
        raise ContractError(f"membership failed: {what}")


def threshold_power(a: Ideal, t, p: int, e: int, variant: str = "pe_minus_1") -> Ideal:
    """a^ceil(t(p^e - 1)) (or the p^e variant), as an ideal."""
    N = ceil_threshold_exponent(t, p, e, variant)
    return a.power(N)

"""Shared fixtures-in-code: tiny rings, corpora, and deliberately naive
reference computations used to cross-check the main paths."""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from fsing import Ideal, PairSpec, Ring, RingPresentation
from fsing.groebner import MonomialOrder, DEGREVLEX, ideal, normal_form, _s_poly
from fsing.ringcore import Polynomial


def ring2(p=2) -> Ring:
    return Ring(p, ("x", "y"))


def pair_of(p, i_gens, a_gens, t, minimal_primes=()) -> PairSpec:
    R = ring2(p)
    pres = RingPresentation(R, ideal(R, *i_gens))
    return PairSpec(pres, ideal(R, *a_gens), Fraction(t), tuple(minimal_primes))


def naive_buchberger(gens, order: MonomialOrder = DEGREVLEX):
    """Buchberger with no pair criteria at all: close under S-polynomial
    remainders until stable, then interreduce.  Reference only."""
    basis = [g.monic(order.key) for g in gens if not g.is_zero()]
    if not basis:
        return ()
    changed = True
    while changed:
        changed = False
        n = len(basis)
        for i in range(n):
            for j in range(i + 1, n):
                s = normal_form(_s_poly(basis[i], basis[j], order), basis, order)
                if not s.is_zero():
                    basis.append(s.monic(order.key))
                    changed = True
        if len(basis) > 300:
            raise RuntimeError("naive closure blew up")
    from fsing.groebner import _reduce_basis

    return _reduce_basis(basis, order)


def linear_membership(f: Polynomial, gens, slack: int = 4) -> bool:
    """Ideal membership by F_p linear algebra on a bounded span: is f an
    F_p-combination of m * g with deg(m * g) <= deg(f) + slack?

    Sound (a found combination is in the ideal); complete on the small
    corpus instances it is used for.
    """
    ring = f.ring
    p = ring.p
    if f.is_zero():
        return True
    bound = f.degree() + slack
    monos = [
        m
        for m in iproduct(range(bound + 1), repeat=ring.nvars)
        if sum(m) <= bound
    ]
    index = {m: i for i, m in enumerate(sorted(monos))}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        for m in index:
            prod = g * ring.monomial(m)
            if prod.degree() > bound:
                continue
            vec = [0] * len(index)
            for mono, c in prod.terms.items():
                vec[index[mono]] = c
            rows.append(vec)
    target = [0] * len(index)
    for mono, c in f.terms.items():
        target[index[mono]] = c

    pivots = []
    for row in rows:
        row = list(row)
        for col, prow in pivots:
            if row[col]:
                factor = row[col]
                row = [(a - factor * b) % p for a, b in zip(row, prow)]
        lead = next((i for i, a in enumerate(row) if a), None)
        if lead is None:
            continue
        inv = pow(row[lead], p - 2, p)
        pivots.append((lead, [a * inv % p for a in row]))
    vec = list(target)
    for col, prow in pivots:
        if vec[col]:
            factor = vec[col]
            vec = [(a - factor * b) % p for a, b in zip(vec, prow)]
    return not any(vec)


def monomial_ideals_2vars(max_exp: int):
    """Every monomial ideal of F_p[x,y] whose minimal generators have both
    exponents <= max_exp: antichains with x-exponents increasing and
    y-exponents strictly decreasing."""
    from itertools import combinations

    grid = range(max_exp + 1)
    out = []
    for k in range(1, max_exp + 2):
        for xs in combinations(grid, k):
            for ys in combinations(grid, k):
                out.append(tuple(zip(xs, sorted(ys, reverse=True))))
    return out


def fedder_corpus_p2():
    """Reduced quotients of F_2[x,y]: hypersurfaces plus squarefree
    monomial ideals, at least 20 of them."""
    R = ring2(2)
    hypersurfaces = [
        "x", "y", "x + y", "x*y", "x*y + x", "x^2 + x*y", "y^2 + x*y",
        "x^2 + y^3", "y^2 + x^3", "x^3 + y^3", "x^2*y + x*y^2",
        "x^3 + x*y", "x^4 + y^3", "x^3*y + x*y^3", "x^2 + y^5",
        "x*y + y^3", "x^2*y + y", "x^5 + y^4", "x^3 + y^4", "x^2*y^2 + x*y",
    ]
    presentations = [RingPresentation(R, ideal(R, f)) for f in hypersurfaces]
    for gens in (("x", "y"), ("x*y",), ("x",), ("y",)):
        presentations.append(RingPresentation(R, ideal(R, *gens)))
    return presentations


def graded_corpus():
    """Homogeneous pairs (I, a, t) for the graded agreement property."""
    items = []
    for p in (2, 3):
        R = ring2(p)
        items += [
            pair_of(p, [], ["x", "y"], Fraction(1)),
            pair_of(p, [], ["x", "y"], Fraction(3, 2)),
            pair_of(p, [], ["x"], Fraction(1, 2)),
            pair_of(p, [], ["x*y"], Fraction(2, 3)),
            pair_of(p, ["x*y"], ["1"], Fraction(1)),
            pair_of(p, ["x*y"], ["x + y"], Fraction(1, 2)),
        ]
    items.append(pair_of(2, ["x^3 + y^3"], ["1"], Fraction(1)))
    items.append(pair_of(3, ["x^3 + y^3"], ["1"], Fraction(1)))
    return items


def principal_corpus():
    """Pairs with principal a, for old/new agreement checks."""
    items = []
    for p in (2, 3):
        items += [
            pair_of(p, [], ["x"], Fraction(1, 2)),
            pair_of(p, [], ["x"], Fraction(1)),
            pair_of(p, [], ["x*y"], Fraction(1, 2)),
            pair_of(p, [], ["x + y"], Fraction(2, 3)),
            pair_of(p, ["x*y"], ["x + y"], Fraction(1, 2)),
        ]
    items.append(pair_of(2, ["x^2 + y^3"], ["x"], Fraction(1, 3)))
    return items


def fpure_pairs_regular():
    """Pairs over the regular ambient ring that are sharply F-pure at level
    one: I_1 of the threshold power is the unit ideal."""
    from fsing import frobenius_root

    candidates = []
    for p in (2, 3):
        candidates += [
            pair_of(p, [], ["x", "y"], Fraction(1, 2)),
            pair_of(p, [], ["x", "y"], Fraction(1)),
            pair_of(p, [], ["x"], Fraction(1, 2)),
            pair_of(p, [], ["x*y"], Fraction(1, 2)),
            pair_of(p, [], ["x", "y^2"], Fraction(1, 2)),
            pair_of(p, [], ["x + y"], Fraction(1, 2)),
        ]
    kept = []
    for pair in candidates:
        if frobenius_root(pair.a_power(1), 1).contains_one():
            kept.append(pair)
    assert len(kept) >= 10
    return kept

"""Ideal arithmetic over F_p[x1..xn]: Buchberger's algorithm with
Gebauer-Moller pair elimination, normal forms, membership, colon ideals,
intersections, and value-semantic Ideal / RingPresentation carriers.

Reduced Groebner bases are unique for a fixed monomial order, so ideal
equality is decided by comparing them.  Computation is single-threaded per
call; Ideal values (including their basis caches) are immutable and may be
shared freely between concurrent tasks.

Resource bounds are explicit: exceeding the configured pair or basis limit
raises ResourceLimitError rather than returning a partial basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .errors import ContractError, ResourceLimitError, StructuralError
from .ringcore import (
    Monomial,
    Polynomial,
    Ring,
    degrevlex_key,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class MonomialOrder:
    name: str
    key: callable = field(compare=False)

    def __repr__(self):
        return f"MonomialOrder({self.name})"


DEGREVLEX = MonomialOrder("degrevlex", degrevlex_key)
LEX = MonomialOrder("lex", lambda exps: exps)


def elimination_order(nblock: int) -> MonomialOrder:
    """Block order eliminating the first `nblock` variables: any monomial
    involving them beats any monomial in the remaining variables."""

    def key(exps):
        return (degrevlex_key(exps[:nblock]), degrevlex_key(exps[nblock:]))

    return MonomialOrder(f"eliminate{nblock}", key)


@dataclass(frozen=True)
class GBLimits:
    max_pairs: int = 200_000
    max_basis: int = 2_000


DEFAULT_LIMITS = GBLimits()


def normal_form(f: Polynomial, basis, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Fully reduced normal form of f against an ordered list of nonzero
    polynomials.  Deterministic: the first listed reducer wins."""
    key = order.key
    p = f.ring.p
    leads = [(g.leading_monomial(key), g.leading_coefficient(key), g) for g in basis]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, g in leads:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c * pow(lc, p - 2, p) % p
                for gm, gc in g.terms.items():
                    mm = mono_mul(gm, shift)
                    s = (work.get(mm, 0) - factor * gc) % p
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial(f.ring, remainder)


def _s_poly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    key = order.key
    p = f.ring.p
    lm_f, lm_g = f.leading_monomial(key), g.leading_monomial(key)
    lcm = mono_lcm(lm_f, lm_g)
    cf = pow(f.leading_coefficient(key), p - 2, p)
    cg = pow(g.leading_coefficient(key), p - 2, p)
    mf = Polynomial(f.ring, {mono_div(lcm, lm_f): cf})
    mg = Polynomial(g.ring, {mono_div(lcm, lm_g): cg})
    return mf * f - mg * g


def _update_pairs(basis, pairs, new_index, order):
    """Gebauer-Moller pair update.

    Adds pairs (i, new) for the freshly appended basis element, discarding
    those killed by the M/F criteria among themselves and by the product
    (coprime lead) criterion, then prunes old pairs whose lcm is rendered
    redundant by the new lead monomial (B criterion).
    """
    key = order.key
    lm = [g.leading_monomial(key) for g in basis]
    h = lm[new_index]

    candidates = []
    for i in range(new_index):
        candidates.append((mono_lcm(lm[i], h), i))
    candidates.sort(key=lambda item: (key(item[0]), item[1]))

    survivors = []
    for pos, (lcm_ih, i) in enumerate(candidates):
        coprime = mono_coprime(lm[i], h)
        dominated = False
        if not coprime:
            for pos2, (lcm_jh, j) in enumerate(candidates):
                if pos2 == pos:
                    continue
                if mono_divides(lcm_jh, lcm_ih):
                    if lcm_jh != lcm_ih or pos2 < pos:
                        dominated = True
                        break
        if not dominated:
            survivors.append((lcm_ih, i, coprime))

    kept_old = []
    for lcm_ij, i, j in pairs:
        if (
            mono_divides(h, lcm_ij)
            and mono_lcm(lm[i], h) != lcm_ij
            and mono_lcm(lm[j], h) != lcm_ij
        ):
            continue
        kept_old.append((lcm_ij, i, j))

    for lcm_ih, i, coprime in survivors:
        if not coprime:
            kept_old.append((lcm_ih, i, new_index))
    return kept_old


def buchberger(generators, order: MonomialOrder = DEGREVLEX, limits: GBLimits = DEFAULT_LIMITS):
    """Reduced Groebner basis of the given generators.

    Returns a tuple of monic polynomials sorted by ascending leading
    monomial; the empty tuple encodes the zero ideal.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return ()
    key = order.key

    basis: list[Polynomial] = []
    pairs: list = []
    for g in sorted(gens, key=lambda f: (key(f.leading_monomial(key)), str(f))):
        g = normal_form(g, basis, order)
        if g.is_zero():
            continue
        basis.append(g.monic(key))
        pairs = _update_pairs(basis, pairs, len(basis) - 1, order)

    processed = 0
    while pairs:
        idx = min(range(len(pairs)), key=lambda k: (key(pairs[k][0]), pairs[k][1], pairs[k][2]))
        lcm_ij, i, j = pairs.pop(idx)
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceLimitError(f"pair limit {limits.max_pairs} exceeded")
        s = normal_form(_s_poly(basis[i], basis[j], order), basis, order)
        if s.is_zero():
            continue
        if len(basis) >= limits.max_basis:
            raise ResourceLimitError(f"basis size limit {limits.max_basis} exceeded")
        basis.append(s.monic(key))
        pairs = _update_pairs(basis, pairs, len(basis) - 1, order)

    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    key = order.key
    basis = sorted(basis, key=lambda f: key(f.leading_monomial(key)))
    minimal = []
    for g in basis:
        lm = g.leading_monomial(key)
        if any(mono_divides(h.leading_monomial(key), lm) for h in minimal):
            continue
        minimal.append(g)
    # Leading monomials are pairwise non-dividing now, so tail reduction
    # cannot kill an element or change its lead; one pass suffices.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others, order).monic(key))
    reduced.sort(key=lambda f: key(f.leading_monomial(key)))
    return tuple(reduced)


def poly_exact_divide(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """f / g when g divides f exactly; raises if a remainder appears."""
    key = order.key
    p = f.ring.p
    lm_g = g.leading_monomial(key)
    lc_inv = pow(g.leading_coefficient(key), p - 2, p)
    quotient = f.ring.zero()
    rest = f
    while not rest.is_zero():
        m = rest.leading_monomial(key)
        if not mono_divides(lm_g, m):
            raise ContractError("exact division failed")
        term = Polynomial(f.ring, {mono_div(m, lm_g): rest.leading_coefficient(key) * lc_inv})
        quotient = quotient + term
        rest = rest - term * g
    return quotient


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal of the ambient ring, value-semantic.

    Equality of the dataclass is structural (same generator list); use
    :meth:`equals` for mathematical equality.  The reduced basis is cached
    per order on first use; "mutation" means building a new Ideal.
    """

    ring: Ring
    generators: tuple[Polynomial, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ContractError("generators must be nonempty; use the zero polynomial")
        for g in gens:
            if g.ring != self.ring:
                raise StructuralError("generator from a different ambient ring")
        nonzero = tuple(g for g in gens if not g.is_zero())
        object.__setattr__(self, "generators", nonzero or (self.ring.zero(),))

    def __hash__(self):
        return hash((self.ring, self.generators))

    # -- basis and membership -------------------------------------------------

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX, limits: GBLimits = DEFAULT_LIMITS):
        cached = self._cache.get(order.name)
        if cached is None:
            if self.is_monomial():
                cached = self._monomial_basis(order)
            else:
                cached = buchberger(self.generators, order, limits)
            self._cache[order.name] = cached
        return cached

    def _monomial_basis(self, order):
        monos = sorted(
            {g.leading_monomial(order.key) for g in self.generators if not g.is_zero()},
            key=order.key,
        )
        minimal = []
        for m in monos:
            if not any(mono_divides(k, m) for k in minimal):
                minimal.append(m)
        return tuple(Polynomial(self.ring, {m: 1}) for m in minimal)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators if not g.is_zero())

    def is_principal(self) -> bool:
        return len(self.groebner_basis()) <= 1

    def normal_form(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        return normal_form(f, self.groebner_basis(order), order)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        if self.is_monomial():
            basis = [g.leading_monomial(degrevlex_key) for g in self.groebner_basis()]
            return all(
                any(mono_divides(b, m) for b in basis) for m in f.terms
            )
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def contains_one(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_one()

    def equals(self, other: "Ideal") -> bool:
        self._check(other)
        return self.groebner_basis() == other.groebner_basis()

    def _check(self, other: "Ideal"):
        if self.ring != other.ring:
            raise StructuralError("ideals live in different ambient rings")

    def with_basis(self, order: MonomialOrder = DEGREVLEX) -> "Ideal":
        """A new Ideal generated by the reduced basis itself."""
        gb = self.groebner_basis(order)
        return Ideal(self.ring, gb or (self.ring.zero(),))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def product(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, (self.ring.zero(),))
        gens = tuple(g * h for g in self.generators for h in other.generators)
        result = Ideal(self.ring, gens)
        if result.is_monomial():
            return result.with_basis()
        return result

    def __mul__(self, other):
        if isinstance(other, Ideal):
            return self.product(other)
        if isinstance(other, Polynomial):
            return self.scale(other)
        return NotImplemented

    def scale(self, f: Polynomial) -> "Ideal":
        return Ideal(self.ring, tuple(f * g for g in self.generators))

    def power(self, n: int) -> "Ideal":
        if n < 0:
            raise ContractError("ideal power must be non-negative")
        if n == 0:
            return Ideal(self.ring, (self.ring.one(),))
        if len(self.generators) == 1:
            return Ideal(self.ring, (self.generators[0] ** n,))
        if self.is_monomial():
            monos = [g.leading_monomial(degrevlex_key) for g in self.generators]
            gens = set()
            for combo in combinations_with_replacement(monos, n):
                m = combo[0]
                for extra in combo[1:]:
                    m = mono_mul(m, extra)
                gens.add(m)
            ideal = Ideal(self.ring, tuple(Polynomial(self.ring, {m: 1}) for m in sorted(gens)))
            return ideal.with_basis()
        gens = []
        for combo in combinations_with_replacement(self.generators, n):
            f = combo[0]
            for extra in combo[1:]:
                f = f * extra
            gens.append(f)
        return Ideal(self.ring, tuple(gens))

    # -- intersection and colon ------------------------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        """J intersect K via a single auxiliary elimination variable."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, (self.ring.zero(),))
        if self.is_monomial() and other.is_monomial():
            a = [g.leading_monomial(degrevlex_key) for g in self.groebner_basis()]
            b = [g.leading_monomial(degrevlex_key) for g in other.groebner_basis()]
            gens = sorted({mono_lcm(m, k) for m in a for k in b})
            return Ideal(self.ring, tuple(Polynomial(self.ring, {m: 1}) for m in gens)).with_basis()
        ring = self.ring
        aux = Ring(ring.p, ("_t0",) + ring.variables)
        t = aux.var("_t0")

        def lift(f):
            return Polynomial(aux, {(0,) + m: c for m, c in f.terms.items()})

        ext_gens = [t * lift(g) for g in self.generators]
        ext_gens += [(aux.one() - t) * lift(g) for g in other.generators]
        gb = buchberger(ext_gens, elimination_order(1))
        kept = []
        for g in gb:
            if all(m[0] == 0 for m in g.terms):
                kept.append(Polynomial(ring, {m[1:]: c for m, c in g.terms.items()}))
        return Ideal(ring, tuple(kept) or (ring.zero(),))

    def colon(self, other: "Ideal") -> "Ideal":
        """(J : K) = {f : f*K inside J}, generator by generator."""
        self._check(other)
        if other.is_zero():
            return Ideal(self.ring, (self.ring.one(),))
        if other.contains_one():
            return self
        if self.is_monomial() and other.is_monomial():
            return self._monomial_colon(other)
        result = None
        for k in other.generators:
            if k.is_zero():
                continue
            piece = self._colon_single(k)
            result = piece if result is None else result.intersect(piece)
        return result

    def _colon_single(self, k: Polynomial) -> "Ideal":
        if self.is_zero():
            return Ideal(self.ring, (self.ring.zero(),))
        if len(self.generators) == 1:
            g = self.generators[0]
            quotient, ok = _try_exact_divide(g, k)
            if ok:
                return Ideal(self.ring, (quotient,))
        meet = self.intersect(Ideal(self.ring, (k,)))
        gens = tuple(poly_exact_divide(g, k) for g in meet.generators if not g.is_zero())
        return Ideal(self.ring, gens or (self.ring.zero(),))

    def _monomial_colon(self, other: "Ideal") -> "Ideal":
        my = [g.leading_monomial(degrevlex_key) for g in self.groebner_basis()]
        result = None
        for k in other.groebner_basis():
            km = k.leading_monomial(degrevlex_key)
            gens = sorted({tuple(max(a - b, 0) for a, b in zip(m, km)) for m in my})
            piece = Ideal(self.ring, tuple(Polynomial(self.ring, {m: 1}) for m in gens))
            result = piece if result is None else result.intersect(piece)
        return result.with_basis()

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _try_exact_divide(f: Polynomial, g: Polynomial):
    try:
        return poly_exact_divide(f, g), True
    except ContractError:
        return None, False


def ideal(ring: Ring, *gens) -> Ideal:
    parsed = tuple(ring.parse(g) if isinstance(g, str) else g for g in gens)
    return Ideal(ring, parsed or (ring.zero(),))


def groebner_basis(J: Ideal, order: MonomialOrder = DEGREVLEX, limits: GBLimits = DEFAULT_LIMITS) -> Ideal:
    """The ideal regenerated by its reduced basis (spec-level operation)."""
    gb = J.groebner_basis(order, limits)
    result = Ideal(J.ring, gb or (J.ring.zero(),))
    result._cache[order.name] = gb
    return result


@dataclass(frozen=True)
class RingPresentation:
    """R = S/I with S = F_p[x1..xn]; I may be zero.

    Reducedness of S/I is a standing hypothesis, asserted by the caller and
    not verified here (radical computation is out of scope); the CLI prints
    a reminder with every report.
    """

    ring: Ring
    defining_ideal: Ideal

    def __post_init__(self):
        if self.defining_ideal.ring != self.ring:
            raise StructuralError("defining ideal lives in a different ring")
        if self.defining_ideal.contains_one():
            raise ContractError("defining ideal is the unit ideal; R would be zero")

    @property
    def p(self) -> int:
        return self.ring.p

    def is_regular_ambient(self) -> bool:
        return self.defining_ideal.is_zero()

    def is_hypersurface(self) -> bool:
        gb = self.defining_ideal.groebner_basis()
        return len(gb) == 1 and not gb[0].is_zero()

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.defining_ideal.normal_form(f)

    def is_zero_in_quotient(self, f: Polynomial) -> bool:
        return self.defining_ideal.contains(f)

    def __str__(self):
        if self.is_regular_ambient():
            return str(self.ring)
        return f"{self.ring}/{self.defining_ideal}"


@lru_cache(maxsize=None)
def bracket_colon(presentation: RingPresentation, e: int) -> Ideal:
    """(I^[p^e] : I), the carrier ideal of solid Frobenius splittings of S/I.

    For I = 0 this is (1): every splitting of the ambient ring qualifies.
    For principal I = (f) it is (f^(q-1)): S is a UFD, so (f^q : f) needs no
    elimination.  Other cases go through the general colon machinery.
    """
    from .frobenius import bracket_power  # deferred to avoid an import cycle

    I = presentation.defining_ideal
    if I.is_zero():
        return Ideal(presentation.ring, (presentation.ring.one(),))
    bracket = bracket_power(I, e)
    gb = I.groebner_basis()
    if len(gb) == 1:
        from .ringcore import prime_power

        q = prime_power(presentation.p, e)
        return Ideal(presentation.ring, (gb[0] ** (q - 1),))
    return bracket.colon(I)


# ---------------------------------------------------------------------------
# Jacobian-style candidates (classical source of test elements)


def poly_determinant(matrix) -> Polynomial:
    """Cofactor-expansion determinant of a square matrix of polynomials."""
    n = len(matrix)
    if n == 0:
        raise ContractError("empty matrix")
    if n == 1:
        return matrix[0][0]
    ring = matrix[0][0].ring
    det = ring.zero()
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * poly_determinant(minor)
        det = det + term if j % 2 == 0 else det - term
    return det


def jacobian_minors(I: Ideal) -> list[Polynomial]:
    """Maximal minors of the Jacobian matrix of the generators of I,
    deterministically ordered."""
    gens = [g for g in I.generators if not g.is_zero()]
    if not gens:
        return []
    ring = I.ring
    rows = [[g.derivative(i) for i in range(ring.nvars)] for g in gens]
    size = min(len(gens), ring.nvars)
    minors = []
    for row_idx in combinations(range(len(gens)), size):
        for col_idx in combinations(range(ring.nvars), size):
            sub = [[rows[r][c] for c in col_idx] for r in row_idx]
            minors.append(poly_determinant(sub))
    return minors

"""Splitting criteria for pairs (R, a^t) with R = S/I over F_p.

The working object is the level-e evaluation-image ideal

    E_e(d) = I_e( d * a^ceil(t(p^e-1)) * (I^[p^e] : I) ) + I,

an ideal of S containing I whose image in R is the ideal of values hit by
evaluating the pair's twisted splittings at 1.  The submodule-generated
purity and regularity notions reduce to "E_e(d) contains 1 for some e": no
enumeration of maximal ideals is involved.  The single-element notion is a
bounded search instead, and never returns a definite "no".

Verdict policy.  "Yes" verdicts always come with replayable witnesses.
"No" is only emitted where a terminating criterion is known:

* ambient hypersurface I = (f) with a = R.  Writing u = f^(p-1), the
  level-(e+1) image ideal is I_e(f^(p^e-1) * I_1((u))) + I, which sits
  inside the level-e one, so the chain E_1 >= E_2 >= ... descends and
  failure at e = 1 is final.  (Locally: u in m^[p] forces failure at every
  level, via (m^[pq] : u^p) = (m^[q] : u)^[p] and m^[q] being m-primary.)
* everything else reports Unknown at the configured bound.

A useful fact used for witness bookkeeping: if 1 lies in I_e(J) + I for an
ideal J, then 1 lies in I_e((w)) + I for a single element w of J, because
evaluation images add: the certifying combination collapses into one
multiplier.  Witness lists therefore store the generator pairs whose joint
image certifies the verdict, and re-verification reruns exactly that
membership.

All checks are pure; the discrepancy search walks its corpus in index order
and its findings are deterministic for a fixed corpus and bounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContractError
from .frobenius import frobenius_root
from .groebner import Ideal, RingPresentation, bracket_colon, jacobian_minors
from .ringcore import Polynomial, ceil_threshold_exponent, prime_power


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a splitting check, with enough data to replay it."""

    verdict: Verdict
    level_e: int | None = None
    witnesses: tuple = ()
    search_bounds: tuple = ()
    detail: tuple = ()

    def bound(self, name, default=None):
        return dict(self.search_bounds).get(name, default)

    def __post_init__(self):
        if self.verdict is Verdict.YES and not self.witnesses:
            raise ContractError("a Yes verdict requires witnesses")


def _bounds(**kwargs) -> tuple:
    return tuple(sorted(kwargs.items()))


@dataclass(frozen=True)
class PairSpec:
    """A pair (R, a^t): presentation of R = S/I, ideal a lifted to S, and an
    exact rational t > 0.

    The hypothesis that a meets R-degrees (a has an element outside every
    minimal prime) is the caller's responsibility; construction spot-checks
    that a is nonzero mod I, and rejects a not lying over I when given
    minimal primes to test against.
    """

    presentation: RingPresentation
    a: Ideal
    t: Fraction
    minimal_primes: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise ContractError("t must be positive")
        if self.a.ring != self.presentation.ring:
            raise ContractError("a lives in a different ambient ring")
        I = self.presentation.defining_ideal
        if all(I.contains(g) for g in self.a.generators):
            raise ContractError("a is zero mod I; it cannot meet R-degrees")
        for prime in self.minimal_primes:
            if prime.contains_ideal(self.a):
                raise ContractError(f"a lies inside the supplied minimal prime {prime}")

    def __hash__(self):
        return hash((self.presentation, self.a, self.t))

    @property
    def ring(self):
        return self.presentation.ring

    @property
    def p(self) -> int:
        return self.presentation.p

    def threshold_exponent(self, e: int) -> int:
        return ceil_threshold_exponent(self.t, self.p, e, "pe_minus_1")

    def a_power(self, e: int) -> Ideal:
        """a^ceil(t(p^e - 1)), cached per level."""
        if e not in self._cache:
            self._cache[e] = self.a.power(self.threshold_exponent(e))
        return self._cache[e]

    def is_trivial_a(self) -> bool:
        return self.a.contains_one()

    def __str__(self):
        return f"({self.presentation}, {self.a}^{self.t})"


def eval_image_ideal(pair: PairSpec, e: int, d: Polynomial | None = None) -> Ideal:
    """E_e(d), as an ideal of S containing I.

    d defaults to 1; when given it must be nonzero mod I (spot check for a
    multiplier from R-degrees).
    """
    if e < 1:
        raise ContractError("e must be >= 1")
    presentation = pair.presentation
    I = presentation.defining_ideal
    if d is not None:
        if d.ring != pair.ring:
            raise ContractError("d lives in a different ambient ring")
        if presentation.is_zero_in_quotient(d):
            raise ContractError("d is zero mod I; not a valid multiplier")
    multiplier = pair.a_power(e).product(bracket_colon(presentation, e))
    if d is not None and not d.is_one():
        multiplier = multiplier.scale(d)
    root = frobenius_root(multiplier, e)
    if I.is_zero():
        return root
    return root + I


def _witnesses_for_level(pair: PairSpec, e: int, d: Polynomial | None) -> tuple:
    """Generator pairs (g from the carrier ideal, a from the a-power) whose
    joint evaluation image certifies a Yes at level e, greedily pruned."""
    presentation = pair.presentation
    I = presentation.defining_ideal
    carrier = bracket_colon(presentation, e)
    apow = pair.a_power(e)
    pairs = [(g, a) for a in apow.generators for g in carrier.generators]

    def certifies(subset) -> bool:
        gens = []
        for g, a in subset:
            w = g * a
            if d is not None:
                w = w * d
            gens.append(w)
        if not gens:
            return False
        total = frobenius_root(Ideal(pair.ring, tuple(gens)), e)
        if not I.is_zero():
            total = total + I
        return total.contains_one()

    if not certifies(pairs):
        return tuple(pairs)
    if len(pairs) <= 24:
        kept = list(pairs)
        for candidate in list(kept):
            trial = [w for w in kept if w != candidate]
            if trial and certifies(trial):
                kept = trial
        return tuple(kept)
    return tuple(pairs)


def verify_witnesses(pair: PairSpec, report: CheckReport, d: Polynomial | None = None) -> bool:
    """Re-run the membership postcondition behind a Yes report."""
    if report.verdict is not Verdict.YES:
        return False
    e = report.level_e
    I = pair.presentation.defining_ideal
    gens = []
    for g, a in report.witnesses:
        w = g * a
        if d is not None:
            w = w * d
        gens.append(w)
    total = frobenius_root(Ideal(pair.ring, tuple(gens)), e)
    if not I.is_zero():
        total = total + I
    return total.contains_one()


def is_locally_sharply_F_pure(
    pair: PairSpec, e_max: int = 3, use_fast_paths: bool = True
) -> CheckReport:
    """Submodule-generated sharp F-purity: does E_e(1) contain 1 for some
    e <= e_max?

    Yes terminates at the witnessing level.  No is only emitted on the
    ambient-hypersurface fast path with a = R (see module docstring);
    otherwise the search reports Unknown at the bound.
    """
    if e_max < 1:
        raise ContractError("e_max must be >= 1")
    bounds = _bounds(e_max=e_max, fast_paths=use_fast_paths)
    detail = []
    for e in range(1, e_max + 1):
        image = eval_image_ideal(pair, e)
        hit = image.contains_one()
        detail.append((e, "contains_one" if hit else "proper"))
        if hit:
            return CheckReport(
                Verdict.YES,
                level_e=e,
                witnesses=_witnesses_for_level(pair, e, None),
                search_bounds=bounds,
                detail=tuple(detail),
            )
    if use_fast_paths and pair.is_trivial_a() and pair.presentation.is_hypersurface():
        # Failure at e = 1 was already observed above and is final here.
        return CheckReport(Verdict.NO, search_bounds=bounds, detail=tuple(detail))
    return CheckReport(Verdict.UNKNOWN, search_bounds=bounds, detail=tuple(detail))


def default_regularity_multipliers(pair: PairSpec) -> tuple[Polynomial, ...]:
    """Classically informative multipliers: 1, Jacobian-style minors of the
    defining ideal, and the generators of a (all nonzero mod I)."""
    presentation = pair.presentation
    candidates = [pair.ring.one()]
    for minor in jacobian_minors(presentation.defining_ideal):
        if not presentation.is_zero_in_quotient(minor):
            candidates.append(presentation.reduce(minor))
    for g in pair.a.generators:
        if not presentation.is_zero_in_quotient(g):
            candidates.append(g)
    unique = []
    for c in candidates:
        if c not in unique:
            unique.append(c)
    return tuple(unique)


def is_locally_strongly_F_regular(
    pair: PairSpec,
    d_candidates=None,
    e_max: int = 3,
) -> CheckReport:
    """Per-multiplier probes of submodule-generated strong F-regularity.

    For each candidate d the probe asks whether E_e(d) contains 1 for some
    e <= e_max.  This is evidence, not the universal quantification over all
    of R-degrees; the authoritative global decision is the test-ideal
    criterion (tau = R), implemented in the testideal module.
    """
    if d_candidates is None:
        d_candidates = default_regularity_multipliers(pair)
    if not d_candidates:
        raise ContractError("need at least one multiplier to probe")
    bounds = _bounds(e_max=e_max, n_multipliers=len(d_candidates))
    detail = []
    witnesses = ()
    level = None
    all_yes = True
    for d in d_candidates:
        found = None
        for e in range(1, e_max + 1):
            if eval_image_ideal(pair, e, d).contains_one():
                found = e
                break
        detail.append((str(d), found))
        if found is None:
            all_yes = False
        else:
            level = max(level or 0, found)
            if not witnesses:
                witnesses = _witnesses_for_level(pair, found, d)
    if all_yes:
        return CheckReport(
            Verdict.YES, level_e=level, witnesses=witnesses,
            search_bounds=bounds, detail=tuple(detail),
        )
    return CheckReport(Verdict.UNKNOWN, search_bounds=bounds, detail=tuple(detail))


def _monomials_up_to(ring, degree_bound):
    from itertools import product as iproduct

    monos = []
    for exps in iproduct(range(degree_bound + 1), repeat=ring.nvars):
        if sum(exps) <= degree_bound:
            monos.append(ring.monomial(exps))
    monos.sort(key=lambda f: (f.degree(), str(f)))
    return monos


def is_sharply_F_pure_old(
    pair: PairSpec, e_max: int = 3, degree_bound: int | None = None
) -> CheckReport:
    """Single-element sharp F-purity, bounded search.

    A candidate a from a^ceil(t(p^e-1)) admits a splitting exactly when
    I_e(a * (I^[p^e] : I)) + I contains 1: a splitting may be any element of
    the full Hom module, and evaluation images collapse combinations into a
    single carrier, so testing the whole carrier ideal per candidate is the
    faithful single-a check.  Candidates range over generators of the
    threshold power of a times monomial multipliers up to degree_bound.
    The existential quantifier over e and a is unbounded, so this check
    never returns No; exhausted bounds report Unknown.
    """
    if degree_bound is None:
        degree_bound = 2 * max((g.degree() for g in pair.a.generators), default=1)
        degree_bound = max(degree_bound, 0)
    presentation = pair.presentation
    I = presentation.defining_ideal
    bounds = _bounds(e_max=e_max, degree_bound=degree_bound)
    monos = _monomials_up_to(pair.ring, degree_bound)
    tried = 0
    for e in range(1, e_max + 1):
        carrier = bracket_colon(presentation, e)
        for base in pair.a_power(e).generators:
            for mono in monos:
                candidate = base * mono
                if candidate.is_zero():
                    continue
                tried += 1
                image = frobenius_root(carrier.scale(candidate), e)
                if not I.is_zero():
                    image = image + I
                if image.contains_one():
                    witnesses = tuple((g, candidate) for g in carrier.generators)
                    return CheckReport(
                        Verdict.YES,
                        level_e=e,
                        witnesses=witnesses,
                        search_bounds=bounds,
                        detail=(("candidates_tried", tried),),
                    )
    return CheckReport(
        Verdict.UNKNOWN, search_bounds=bounds, detail=(("candidates_tried", tried),)
    )


# ---------------------------------------------------------------------------
# rational points and local checks


def point_from_maximal(m: Ideal) -> tuple[int, ...]:
    """Extract the coordinates of a rational point from generators of the
    form x_i - c_i; rejects anything else."""
    ring = m.ring
    coords = [None] * ring.nvars
    for g in m.generators:
        linear = None
        constant = 0
        for mono, coeff in g.terms.items():
            if sum(mono) == 0:
                constant = coeff
            elif sum(mono) == 1 and max(mono) == 1:
                if linear is not None:
                    linear = None
                    break
                linear = (mono.index(1), coeff)
            else:
                linear = None
                break
        if linear is None:
            raise ContractError(
                f"generator {g} is not of the form x_i - c_i; only rational "
                "maximal ideals are supported"
            )
        idx, coeff = linear
        inv = pow(coeff, ring.p - 2, ring.p)
        value = (-constant * inv) % ring.p
        if coords[idx] is not None and coords[idx] != value:
            raise ContractError("inconsistent point coordinates")
        coords[idx] = value
    if any(c is None for c in coords):
        raise ContractError("generators do not pin down every coordinate; not maximal")
    return tuple(coords)


def maximal_from_point(ring, coords) -> Ideal:
    if len(coords) != ring.nvars:
        raise ContractError("point arity mismatch")
    gens = tuple(ring.var(v) - (c % ring.p) for v, c in zip(ring.variables, coords))
    return Ideal(ring, gens)


def in_maximal_bracket(f: Polynomial, point, q: int) -> bool:
    """f in m^[q] for the rational point's maximal ideal: after translating
    the point to the origin, every term must have some exponent >= q."""
    shifted = f.shift(point) if any(c % f.ring.p for c in point) else f
    return all(max(m) >= q for m in shifted.terms)


def local_check_at_maximal(
    pair: PairSpec,
    m: Ideal,
    e_max: int = 3,
    d: Polynomial | None = None,
    use_fast_paths: bool = True,
) -> CheckReport:
    """Fedder-style containment test at a rational maximal ideal m of S
    containing I: Yes when d * a^ceil(t(p^e-1)) * (I^[p^e] : I) escapes
    m^[p^e] for some e <= e_max."""
    point = point_from_maximal(m)
    presentation = pair.presentation
    for g in presentation.defining_ideal.generators:
        if g.evaluate(point) != 0:
            raise ContractError("m does not contain the defining ideal")
    if d is not None and presentation.is_zero_in_quotient(d):
        raise ContractError("d is zero mod I")
    bounds = _bounds(e_max=e_max, point=point, fast_paths=use_fast_paths)
    detail = []
    for e in range(1, e_max + 1):
        q = prime_power(pair.p, e)
        carrier = bracket_colon(presentation, e)
        for a_gen in pair.a_power(e).generators:
            for g in carrier.generators:
                w = a_gen * g
                if d is not None:
                    w = w * d
                if not w.is_zero() and not in_maximal_bracket(w, point, q):
                    return CheckReport(
                        Verdict.YES,
                        level_e=e,
                        witnesses=((g, a_gen),),
                        search_bounds=bounds,
                        detail=tuple(detail),
                    )
        detail.append((e, "contained"))
    if (
        use_fast_paths
        and d is None
        and pair.is_trivial_a()
        and presentation.is_hypersurface()
    ):
        return CheckReport(Verdict.NO, search_bounds=bounds, detail=tuple(detail))
    return CheckReport(Verdict.UNKNOWN, search_bounds=bounds, detail=tuple(detail))


# ---------------------------------------------------------------------------
# discrepancy hunt


@dataclass(frozen=True)
class CorpusItem:
    pair: PairSpec
    local_only: bool = False
    label: str = ""


@dataclass(frozen=True)
class DiscrepancyFinding:
    index: int
    item: CorpusItem
    new_report: CheckReport
    old_report: CheckReport


def search_discrepancy(corpus, e_max: int = 3, degree_bound: int = 2) -> list[DiscrepancyFinding]:
    """Scan pairs for which the submodule-generated check says Yes while the
    bounded single-element search stays Unknown.

    Findings are candidates only, never proofs: the single-element search is
    a semi-decision.  Principal a and local presentations provably never
    separate the two notions, so such items are skipped.  Items that blow a
    resource limit are skipped with a note rather than aborting the scan.
    Results are ordered by corpus index.
    """
    from .errors import ResourceLimitError

    findings = []
    for index, item in enumerate(corpus):
        if isinstance(item, PairSpec):
            item = CorpusItem(item)
        if item.local_only:
            continue
        try:
            if item.pair.a.is_principal():
                continue
            new_report = is_locally_sharply_F_pure(item.pair, e_max)
            if new_report.verdict is not Verdict.YES:
                continue
            old_report = is_sharply_F_pure_old(item.pair, e_max, degree_bound)
            if old_report.verdict is Verdict.UNKNOWN:
                findings.append(DiscrepancyFinding(index, item, new_report, old_report))
        except ResourceLimitError:
            continue
    return findings

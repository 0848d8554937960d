"""Uniformly compatible ideals, centers of F-purity, purity of quotients,
and the twisted sharp Frobenius closure.

An ideal J containing I is uniformly compatible for the pair when every
twisted splitting sends J^(1/q) back into J, which in root-ideal terms is

    I_e( a^ceil(t(p^e-1)) * (I^[p^e] : I) * J )  contained in  J + I

for every e.  "Every e" is truncated at e_max with the verdict labeled as
such; a single failing level refutes compatibility outright.

Closure membership asks whether a^ceil(t(q-1)) * z^q lies in J^[q] + I for
all large e.  Failures only disprove membership when they provably
propagate upward.  Two certificates are implemented, both for the regular
ambient case (I = 0), where the containment at level e is equivalent to
z * W_e inside J for W_e = I_e(a^ceil(t(p^e-1))):

* a = R: then W_e = (1) for every e and all levels agree.
* I_1(a^ceil(t(p-1))) = (1): then W_(e+1) contains
  I_e(a^(ceil...) * I_1(a^(ceil...))) = W_e, the W_e chain ascends, and a
  failure at e persists at every later level.

Without a certificate an observed failure reports Unknown: membership is an
"all large e" condition and finitely many failures prove nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .criteria import CheckReport, PairSpec, Verdict, _bounds, eval_image_ideal, is_locally_sharply_F_pure
from .errors import ContractError
from .frobenius import frobenius_root
from .groebner import Ideal, RingPresentation, bracket_colon
from .ringcore import Polynomial, prime_power


def is_uniformly_compatible(pair: PairSpec, J: Ideal, e_max: int = 2) -> CheckReport:
    """Yes (up to e_max) when every probed twisted map preserves J; No on
    the first failing level, which is conclusive."""
    presentation = pair.presentation
    I = presentation.defining_ideal
    if not J.contains_ideal(I):
        raise ContractError("J must contain the defining ideal")
    bounds = _bounds(e_max=e_max)
    target = J if I.is_zero() else (J + I).with_basis()
    detail = []
    for e in range(1, e_max + 1):
        twisted = pair.a_power(e).product(bracket_colon(presentation, e)).product(J)
        piece = frobenius_root(twisted, e)
        ok = target.contains_ideal(piece)
        detail.append((e, "preserved" if ok else "escapes"))
        if not ok:
            return CheckReport(Verdict.NO, level_e=e, search_bounds=bounds, detail=tuple(detail))
    witnesses = tuple((g, pair.ring.one()) for g in J.generators)
    return CheckReport(
        Verdict.YES, level_e=e_max, witnesses=witnesses,
        search_bounds=bounds, detail=tuple(detail),
    )


def centers_among(pair: PairSpec, candidates, e_max: int = 2) -> list[Ideal]:
    """Filter caller-asserted prime candidates down to the compatible ones.

    Primality is not verified here (out of scope); a surviving candidate is
    a center of F-purity exactly when it is prime."""
    kept = []
    for J in candidates:
        if is_uniformly_compatible(pair, J, e_max).verdict is Verdict.YES:
            kept.append(J)
    return kept


def quotient_F_pure_check(pair: PairSpec, J: Ideal, e_max: int = 3) -> CheckReport:
    """Constructive check that S/J inherits F-purity from a locally sharply
    F-pure pair with compatible J.

    Both hypotheses are verified first and violations are contract errors.
    A pair splitting evaluating to 1 has its total multiplier inside
    (J^[q] : J) by compatibility, so the induced splitting of S/J evaluates
    to 1 as well; the check below recomputes that image downstairs.
    """
    if J.contains_one():
        raise ContractError("J = (1): the quotient is the zero ring")
    purity = is_locally_sharply_F_pure(pair, e_max)
    if purity.verdict is not Verdict.YES:
        raise ContractError("pair is not verified locally sharply F-pure within e_max")
    compat = is_uniformly_compatible(pair, J, e_max)
    if compat.verdict is not Verdict.YES:
        raise ContractError("J is not verified uniformly compatible within e_max")

    quotient = RingPresentation(pair.ring, J.with_basis())
    bounds = _bounds(e_max=e_max, witness_level=purity.level_e)
    detail = []
    for e in range(purity.level_e, e_max + 1):
        carrier = bracket_colon(quotient, e)
        image = frobenius_root(carrier, e) + J
        hit = image.contains_one()
        detail.append((e, "contains_one" if hit else "proper"))
        if hit:
            witnesses = tuple((g, pair.ring.one()) for g in carrier.generators)
            return CheckReport(
                Verdict.YES, level_e=e, witnesses=witnesses,
                search_bounds=bounds, detail=tuple(detail),
            )
    return CheckReport(Verdict.UNKNOWN, search_bounds=bounds, detail=tuple(detail))


class ClosureVerdict(enum.Enum):
    IN_CLOSURE_BOUNDED = "in_closure_bounded"
    NOT_IN_CLOSURE = "not_in_closure"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClosureReport:
    verdict: ClosureVerdict
    checked: tuple  # of (e, bool) containment results
    failed_at: int | None = None
    certificate: str = ""


def _closure_holds_at(pair: PairSpec, J: Ideal, z: Polynomial, e: int) -> bool:
    I = pair.presentation.defining_ideal
    q = prime_power(pair.p, e)
    target = Ideal(pair.ring, tuple(g.frobenius_power(e) for g in J.generators if not g.is_zero()) or (pair.ring.zero(),))
    if not I.is_zero():
        target = target + I
    zq = z**q
    return all(target.contains(base * zq) for base in pair.a_power(e).generators)


def _failure_certificate(pair: PairSpec) -> str | None:
    if not pair.presentation.is_regular_ambient():
        return None
    if pair.is_trivial_a():
        return "trivial pair over regular ambient: containment is level-independent"
    if frobenius_root(pair.a_power(1), 1).contains_one():
        return (
            "regular ambient with I_1(a^ceil(t(p-1))) = (1): the root chain "
            "ascends, so failure persists at every deeper level"
        )
    return None


def frobenius_closure_membership(
    pair: PairSpec, J: Ideal, z: Polynomial, e_min: int = 1, e_max: int = 3
) -> ClosureReport:
    """Membership of z in the twisted sharp Frobenius closure of J.

    IN_CLOSURE_BOUNDED: containment held at every probed level (a bounded
    statement, not a proof for all large e).  NOT_IN_CLOSURE: a failure was
    observed and a certificate shows failures propagate upward.  UNKNOWN:
    failure without a certificate.
    """
    if e_min > e_max or e_min < 1:
        raise ContractError("need 1 <= e_min <= e_max")
    if z.ring != pair.ring:
        raise ContractError("z lives in a different ambient ring")
    checked = []
    failed_at = None
    for e in range(e_min, e_max + 1):
        ok = _closure_holds_at(pair, J, z, e)
        checked.append((e, ok))
        if not ok and failed_at is None:
            failed_at = e
    if failed_at is None:
        return ClosureReport(ClosureVerdict.IN_CLOSURE_BOUNDED, tuple(checked))
    certificate = _failure_certificate(pair)
    if certificate is not None:
        return ClosureReport(
            ClosureVerdict.NOT_IN_CLOSURE, tuple(checked), failed_at, certificate
        )
    return ClosureReport(ClosureVerdict.UNKNOWN, tuple(checked), failed_at)

"""Purity and regularity checks, local checks, and the discrepancy hunt."""

from fractions import Fraction

import pytest

from fsing import (
    ContractError,
    CorpusItem,
    PairSpec,
    Ring,
    RingPresentation,
    Verdict,
    eval_image_ideal,
    is_locally_sharply_F_pure,
    is_locally_strongly_F_regular,
    is_sharply_F_pure_old,
    local_check_at_maximal,
    maximal_from_point,
    search_discrepancy,
    verify_witnesses,
)
from fsing.criteria import point_from_maximal
from fsing.groebner import ideal
from fsing.oracle import brute_splitting_search
from fsing.testideal import test_ideal_regular as tau_regular

from helpers import fedder_corpus_p2, graded_corpus, pair_of, principal_corpus

R2 = Ring(2, ("x", "y"))
Rx = Ring(2, ("x",))


def pair1(a_gens, t, i_gens=()):
    pres = RingPresentation(Rx, ideal(Rx, *i_gens))
    return PairSpec(pres, ideal(Rx, *a_gens), Fraction(t))


class TestEvalImageIdeal:
    def test_one_variable_unit_image(self):
        pair = pair1(["x"], 1)
        E1 = eval_image_ideal(pair, 1)
        assert E1.contains_one()

    def test_node_trivial_pair(self):
        # I_1((x*y)) = (1) since x*y = 1^2 * x*y, so E_1 is the unit ideal
        pair = pair_of(2, ["x*y"], ["1"], 1)
        E1 = eval_image_ideal(pair, 1)
        assert E1.contains_one()

    def test_cusp_image_is_maximal(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        E1 = eval_image_ideal(pair, 1)
        assert E1.equals(ideal(R2, "x", "y"))

    def test_zero_a_rejected(self):
        pres = RingPresentation(R2, ideal(R2, "x*y"))
        with pytest.raises(ContractError):
            PairSpec(pres, ideal(R2, "x*y"), Fraction(1))

    def test_zero_multiplier_rejected(self):
        pair = pair_of(2, ["x*y"], ["1"], 1)
        with pytest.raises(ContractError):
            eval_image_ideal(pair, 1, R2.parse("x*y"))

    def test_minimal_prime_spot_check(self):
        pres = RingPresentation(R2, ideal(R2, "x*y"))
        with pytest.raises(ContractError):
            PairSpec(pres, ideal(R2, "x"), Fraction(1), (ideal(R2, "x"),))


class TestSharpPurity:
    def test_half_exponent_line(self):
        report = is_locally_sharply_F_pure(pair1(["x"], Fraction(1, 2)), e_max=1)
        assert report.verdict is Verdict.YES and report.level_e == 1

    def test_cusp_fast_path_no(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        assert is_locally_sharply_F_pure(pair, 3).verdict is Verdict.NO

    def test_cusp_general_engine_unknown(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        report = is_locally_sharply_F_pure(pair, 3, use_fast_paths=False)
        assert report.verdict is Verdict.UNKNOWN
        assert dict(report.detail) == {1: "proper", 2: "proper", 3: "proper"}

    def test_trivial_a_reduces_to_classical(self):
        # with a = R the exponent t is irrelevant
        verdicts = {
            is_locally_sharply_F_pure(pair_of(2, ["x*y"], ["1"], t), 2).verdict
            for t in (Fraction(1, 2), 1, Fraction(7, 3))
        }
        assert verdicts == {Verdict.YES}

    def test_yes_witnesses_verify(self):
        pair = pair_of(2, ["x*y"], ["1"], 1)
        report = is_locally_sharply_F_pure(pair, 2)
        assert report.witnesses
        assert verify_witnesses(pair, report)

    def test_monotone_in_e_for_witnessed_pairs(self):
        # composition lifts a level-e witness to every multiple of e
        for pair in (pair_of(2, ["x*y"], ["1"], 1), pair_of(2, [], ["x", "y"], Fraction(1, 2))):
            base = is_locally_sharply_F_pure(pair, 2)
            assert base.verdict is Verdict.YES
            e = base.level_e
            for n in (2, 3):
                assert eval_image_ideal(pair, n * e).contains_one()


class TestStrongRegularityProbe:
    def test_half_exponent_probe_at_x(self):
        pair = pair1(["x"], Fraction(1, 2))
        report = is_locally_strongly_F_regular(pair, [Rx.parse("x")], e_max=2)
        assert report.verdict is Verdict.YES
        assert dict(report.detail)["x"] == 2

    def test_d_one_reduces_to_purity(self):
        pair = pair_of(2, [], ["x", "y"], Fraction(1, 2))
        probe = is_locally_strongly_F_regular(pair, [R2.one()], e_max=2)
        purity = is_locally_sharply_F_pure(pair, 2)
        assert probe.verdict == purity.verdict

    def test_cusp_probe_fails_and_tau_confirms(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        report = is_locally_strongly_F_regular(pair, e_max=3)
        assert report.verdict is Verdict.UNKNOWN
        # authoritative cross-check on a regular-ambient pair instead:
        assert tau_regular(ideal(R2, "x", "y"), Fraction(3)).contains_one() is False

    def test_default_multipliers(self):
        from fsing.criteria import default_regularity_multipliers

        pair = pair_of(3, ["x*y"], ["x + y"], 1)
        cands = default_regularity_multipliers(pair)
        assert R2.one() not in cands  # different ring object
        assert any(c.is_one() for c in cands)
        assert len(cands) >= 3


class TestOldDefinition:
    def test_line_with_unit_witness(self):
        report = is_sharply_F_pure_old(pair1(["x"], 1), e_max=1, degree_bound=0)
        assert report.verdict is Verdict.YES and report.level_e == 1
        assert any(a == Rx.parse("x") for _, a in report.witnesses)

    def test_exhausted_bounds_unknown(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        report = is_sharply_F_pure_old(pair, e_max=2, degree_bound=1)
        assert report.verdict is Verdict.UNKNOWN
        assert report.bound("e_max") == 2 and report.bound("degree_bound") == 1

    def test_old_yes_implies_new_yes_same_level(self):
        for pair in principal_corpus():
            old = is_sharply_F_pure_old(pair, e_max=2, degree_bound=2)
            if old.verdict is Verdict.YES:
                new = is_locally_sharply_F_pure(pair, old.level_e)
                assert new.verdict is Verdict.YES
                assert new.level_e <= old.level_e

    def test_principal_agreement(self):
        for pair in principal_corpus():
            new = is_locally_sharply_F_pure(pair, 2)
            old = is_sharply_F_pure_old(pair, e_max=2, degree_bound=2)
            if new.verdict is Verdict.YES:
                assert old.verdict is Verdict.YES and old.level_e <= new.level_e
            if old.verdict is Verdict.YES:
                assert new.verdict is Verdict.YES


class TestLocalChecks:
    def test_node_at_origin(self):
        pair = pair_of(2, ["x*y"], ["1"], 1)
        m = maximal_from_point(R2, (0, 0))
        report = local_check_at_maximal(pair, m, 3)
        assert report.verdict is Verdict.YES and report.level_e == 1

    def test_cusp_at_origin_fast_no(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        m = maximal_from_point(R2, (0, 0))
        assert local_check_at_maximal(pair, m, 3).verdict is Verdict.NO
        report = local_check_at_maximal(pair, m, 3, use_fast_paths=False)
        assert report.verdict is Verdict.UNKNOWN

    def test_cusp_at_smooth_point(self):
        pair = pair_of(2, ["x^2 + y^3"], ["1"], 1)
        m = maximal_from_point(R2, (1, 1))  # (1,1) is on the curve over F_2
        assert pair.presentation.defining_ideal.generators[0].evaluate((1, 1)) == 0
        assert local_check_at_maximal(pair, m, 2).verdict is Verdict.YES

    def test_point_validation(self):
        pair = pair_of(2, ["x*y"], ["1"], 1)
        with pytest.raises(ContractError):
            local_check_at_maximal(pair, maximal_from_point(R2, (1, 1)), 2)
        with pytest.raises(ContractError):
            local_check_at_maximal(pair, ideal(R2, "x^2", "y"), 2)

    def test_point_round_trip(self):
        R5 = Ring(5, ("x", "y"))
        m = maximal_from_point(R5, (2, 3))
        assert point_from_maximal(m) == (2, 3)

    def test_graded_agreement(self):
        origin2 = maximal_from_point(R2, (0, 0))
        for pair in graded_corpus():
            m = origin2 if pair.p == 2 else maximal_from_point(pair.ring, (0, 0))
            glob = is_locally_sharply_F_pure(pair, 3)
            loc = local_check_at_maximal(pair, m, 3)
            assert glob.verdict == loc.verdict, str(pair)


class TestBruteOracleEquivalence:
    def test_level_one_agreement(self):
        # I = 0 or monomial, p = 2, e = 1: engine vs exhaustive map search
        cases = [
            pair_of(2, [], ["1"], 1),
            pair_of(2, [], ["x", "y"], Fraction(1, 2)),
            pair_of(2, [], ["x", "y"], 2),
            pair_of(2, [], ["x*y"], 1),
            pair_of(2, ["x*y"], ["1"], 1),
            pair_of(2, ["x"], ["1"], 1),
            pair_of(2, ["x", "y"], ["1"], 1),
        ]
        for pair in cases:
            main = eval_image_ideal(pair, 1).contains_one()
            brute = brute_splitting_search(pair.presentation, pair.a, pair.t)
            assert main == brute, str(pair)


class TestDiscrepancySearch:
    def test_empty_corpus(self):
        assert search_discrepancy([]) == []

    def test_principal_never_reported(self):
        findings = search_discrepancy(principal_corpus(), e_max=2, degree_bound=2)
        assert findings == []

    def test_local_flag_skipped(self):
        pair = pair_of(2, [], ["x", "y"], Fraction(1, 2))
        items = [CorpusItem(pair, local_only=True, label="local")]
        assert search_discrepancy(items) == []

    def test_orders_by_index_and_accepts_bare_pairs(self):
        pairs = [
            pair_of(2, [], ["x", "y"], Fraction(1, 2)),
            pair_of(2, [], ["x", "y^2"], Fraction(1, 2)),
        ]
        findings = search_discrepancy(pairs, e_max=2, degree_bound=2)
        assert [f.index for f in findings] == sorted(f.index for f in findings)

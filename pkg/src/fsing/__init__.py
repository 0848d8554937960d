"""Exact characteristic-p singularity invariants of pairs (R, a^t) over F_p."""

from .errors import (
    ContractError,
    FsingError,
    HeuristicFailureError,
    ParseError,
    ResourceLimitError,
    StructuralError,
)
from .ringcore import (
    ExactRational,
    Monomial,
    Polynomial,
    PrimeFieldElement,
    Ring,
    ceil_threshold_exponent,
)
from .groebner import (
    DEGREVLEX,
    GBLimits,
    Ideal,
    LEX,
    RingPresentation,
    bracket_colon,
    groebner_basis,
    ideal,
    normal_form,
)
from .frobenius import ComposedSplitting, bracket_power, frobenius_root, splitting_compose
from .criteria import (
    CheckReport,
    CorpusItem,
    PairSpec,
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
from .testideal import (
    TestIdealResult,
    is_radical_sample,
    test_element_heuristic,
    test_ideal_quotient,
    test_ideal_regular,
)
from .thresholds import NuSequence, fpt_interval, is_sharp_at, nu_sequence, nu_value
from .compatible import (
    ClosureReport,
    ClosureVerdict,
    centers_among,
    frobenius_closure_membership,
    is_uniformly_compatible,
    quotient_F_pure_check,
)

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "FsingError",
    "HeuristicFailureError",
    "ParseError",
    "ResourceLimitError",
    "StructuralError",
    "ExactRational",
    "Monomial",
    "Polynomial",
    "PrimeFieldElement",
    "Ring",
    "ceil_threshold_exponent",
    "DEGREVLEX",
    "LEX",
    "GBLimits",
    "Ideal",
    "RingPresentation",
    "bracket_colon",
    "groebner_basis",
    "ideal",
    "normal_form",
    "ComposedSplitting",
    "bracket_power",
    "frobenius_root",
    "splitting_compose",
    "CheckReport",
    "CorpusItem",
    "PairSpec",
    "Verdict",
    "eval_image_ideal",
    "is_locally_sharply_F_pure",
    "is_locally_strongly_F_regular",
    "is_sharply_F_pure_old",
    "local_check_at_maximal",
    "maximal_from_point",
    "search_discrepancy",
    "verify_witnesses",
    "TestIdealResult",
    "is_radical_sample",
    "test_element_heuristic",
    "test_ideal_quotient",
    "test_ideal_regular",
    "NuSequence",
    "fpt_interval",
    "is_sharp_at",
    "nu_sequence",
    "nu_value",
    "ClosureReport",
    "ClosureVerdict",
    "centers_among",
    "frobenius_closure_membership",
    "is_uniformly_compatible",
    "quotient_F_pure_check",
]

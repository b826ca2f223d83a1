"""Digit expansions over algebraic bases, digit-omission counting, and
companion digit problems (persistence, practical numbers).

Arithmetic is exact throughout: ring elements are integer vectors, valuations
are integers, and decimal output carries explicit precision.
"""

from .counting import (
    BoundReport,
    CountRequest,
    GapReport,
    NarkiewiczReport,
    SigmaValue,
    count_omitting,
    count_omitting_naive,
    naive_digit_presence,
    narkiewicz_check,
    rational_digit_presence,
    sigma,
    sigma_of_norm,
    verify_gap_lemma,
)
from .digits_extra import (
    CentralBinomialRecord,
    PersistenceRecord,
    central_binomial_factors,
    central_binomial_practical,
    is_practical,
    is_practical_criterion,
    is_practical_subset_sum,
    persistence,
    qualifies_central_binomial,
    sloane_map,
)
from .errors import (
    BetadixError,
    ClosureBudgetExceeded,
    DivisionByZero,
    HYPOTHESIS_CODES,
    HypothesisViolated,
    NormTooSmall,
    NotCoprime,
    NotDegreeOne,
    NotMonic,
    NotRepresentative,
    NotTerminating,
    OutOfDomain,
    PrecisionExhausted,
    PrecisionMismatch,
    RamifiedPrime,
    Reducible,
    RingMismatch,
    RootOfUnity,
    StateBudgetExceeded,
)
from .expansion import (
    BetaExpansion,
    CnsVerdict,
    all_roots_outside_unit_disk,
    beta_digits,
    beta_expansion,
    cns_check,
    is_expansive,
    omits_digit,
    radix_expansion,
    render_text,
)
from .padic import (
    PadicInt,
    PrimeIdealModel,
    UnitOrderSummary,
    combined_u,
    hensel_lift,
    interpolate_G,
    lipschitz_constants,
    padic_exp,
    padic_log,
    primes_above,
    qval,
    unit_order_u,
    unit_orders,
    vp,
)
from .residue import (
    DigitSet,
    ResidueTable,
    digit_set,
    digit_set_canonical,
    is_representative_system,
    residue_digit,
    residue_reducer,
    truncation_map,
)
from .ring import AlgebraicInt, NumberRing, divide_exact, divides, poly_from_string

__version__ = "0.1.0"

__all__ = [
    "AlgebraicInt",
    "BetadixError",
    "BetaExpansion",
    "BoundReport",
    "CentralBinomialRecord",
    "ClosureBudgetExceeded",
    "CnsVerdict",
    "CountRequest",
    "DigitSet",
    "DivisionByZero",
    "GapReport",
    "HYPOTHESIS_CODES",
    "HypothesisViolated",
    "NarkiewiczReport",
    "NormTooSmall",
    "NotCoprime",
    "NotDegreeOne",
    "NotMonic",
    "NotRepresentative",
    "NotTerminating",
    "NumberRing",
    "OutOfDomain",
    "PadicInt",
    "PersistenceRecord",
    "PrecisionExhausted",
    "PrecisionMismatch",
    "PrimeIdealModel",
    "RamifiedPrime",
    "Reducible",
    "ResidueTable",
    "RingMismatch",
    "RootOfUnity",
    "SigmaValue",
    "StateBudgetExceeded",
    "UnitOrderSummary",
    "all_roots_outside_unit_disk",
    "beta_digits",
    "beta_expansion",
    "central_binomial_factors",
    "central_binomial_practical",
    "cns_check",
    "combined_u",
    "count_omitting",
    "count_omitting_naive",
    "digit_set",
    "digit_set_canonical",
    "divide_exact",
    "divides",
    "hensel_lift",
    "interpolate_G",
    "is_expansive",
    "is_practical",
    "is_practical_criterion",
    "is_practical_subset_sum",
    "is_representative_system",
    "lipschitz_constants",
    "naive_digit_presence",
    "narkiewicz_check",
    "omits_digit",
    "padic_exp",
    "padic_log",
    "persistence",
    "poly_from_string",
    "primes_above",
    "qualifies_central_binomial",
    "qval",
    "radix_expansion",
    "rational_digit_presence",
    "render_text",
    "residue_digit",
    "residue_reducer",
    "sigma",
    "sigma_of_norm",
    "sloane_map",
    "truncation_map",
    "unit_order_u",
    "unit_orders",
    "verify_gap_lemma",
    "vp",
]

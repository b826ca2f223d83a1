"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` used by the CLI when it
emits structured error reports.  Errors in HYPOTHESIS_CODES mean "the input does
not satisfy the hypotheses of the requested computation" and map to exit code 2;
anything else escaping to the CLI top level is an internal error (exit code 1).
"""
from __future__ import annotations


class BetadixError(Exception):
    code = "error"


class NotMonic(BetadixError):
    code = "not-monic"


class Reducible(BetadixError):
    code = "reducible"


class RingMismatch(BetadixError):
    code = "ring-mismatch"


class DivisionByZero(BetadixError):
    code = "division-by-zero"


class NormTooSmall(BetadixError):
    code = "norm-too-small"


class NotRepresentative(BetadixError):
    code = "not-representative"


class StateBudgetExceeded(BetadixError):
    code = "state-budget-exceeded"


class ClosureBudgetExceeded(BetadixError):
    code = "closure-budget-exceeded"


class NotTerminating(BetadixError):
    """Radix expansion requested but the digit stream has a nonzero period."""

    code = "not-terminating"

    def __init__(self, message, cycle=()):
        super().__init__(message)
        self.cycle = tuple(cycle)


class RamifiedPrime(BetadixError):
    code = "ramified-prime"


class NotDegreeOne(BetadixError):
    code = "not-degree-one"


class PrecisionExhausted(BetadixError):
    code = "precision-exhausted"


class PrecisionMismatch(BetadixError):
    code = "precision-mismatch"


class OutOfDomain(BetadixError):
    code = "out-of-domain"


class NotCoprime(BetadixError):
    code = "not-coprime"


class RootOfUnity(BetadixError):
    code = "root-of-unity"


class HypothesisViolated(BetadixError):
    """A proven statement failed on computed data; this signals a bug, not bad input."""

    code = "hypothesis-violated"


HYPOTHESIS_CODES = frozenset(
    {
        "not-monic",
        "reducible",
        "division-by-zero",
        "norm-too-small",
        "not-representative",
        "ramified-prime",
        "not-degree-one",
        "not-coprime",
        "root-of-unity",
        "out-of-domain",
    }
)

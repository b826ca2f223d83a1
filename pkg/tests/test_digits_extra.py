"""Digit-product persistence and practical-number checks."""

import math
import random
from functools import reduce

import pytest

from betadix import (
    HypothesisViolated,
    central_binomial_factors,
    central_binomial_practical,
    is_practical,
    is_practical_criterion,
    is_practical_subset_sum,
    persistence,
    qualifies_central_binomial,
    sloane_map,
)


def _naive_product_of_digits(n, b):
    if n == 0:
        return 0
    out = 1
    while n:
        out *= n % b
        n //= b
    return out


def test_sloane_map_values():
    assert sloane_map(39) == 27
    assert sloane_map(27) == 14
    assert sloane_map(14) == 4
    assert sloane_map(0) == 0
    assert sloane_map(7) == 7
    assert sloane_map(999) == 729


def test_sloane_map_other_bases():
    assert sloane_map(5, 2) == 0          # 101 -> 1*0*1
    assert sloane_map(7, 2) == 1          # 111
    assert sloane_map(255, 16) == 225     # ff -> 15*15


def test_sloane_map_matches_naive():
    rng = random.Random(51)
    for _ in range(400):
        b = rng.randint(2, 16)
        n = rng.randint(0, 10**9)
        assert sloane_map(n, b) == _naive_product_of_digits(n, b)


def test_sloane_map_validates_inputs():
    with pytest.raises(ValueError):
        sloane_map(5, 1)
    with pytest.raises(ValueError):
        sloane_map(-1)


def test_sloane_map_contracts_above_base():
    """One digit-product step strictly shrinks any n >= b."""
    for b in (2, 3, 10, 16):
        for n in range(b, 30000):
            assert sloane_map(n, b) < n
    for b in range(2, 17):
        for n in range(b, 3000):
            assert sloane_map(n, b) < n


def test_sloane_map_fixes_single_digits():
    for b in range(2, 17):
        for n in range(b):
            assert sloane_map(n, b) == n


def test_persistence_39():
    rec = persistence(39)
    assert rec.orbit == (39, 27, 14, 4)
    assert rec.l == 3
    assert rec.to_csv_row() == "39,10,3,39;27;14;4"


def test_persistence_small_and_zero_hitting():
    assert persistence(4).l == 0
    assert persistence(4).orbit == (4,)
    assert persistence(10).orbit == (10, 0)
    assert persistence(10).l == 1
    assert persistence(25).orbit == (25, 10, 0)


def test_persistence_record_dict():
    d = persistence(39).to_dict()
    assert d == {"n": 39, "base": 10, "l": 3, "orbit": [39, 27, 14, 4]}


def test_persistence_record_eleven_steps():
    # smallest n of persistence 11 in base 10; re-check the orbit is a real
    # digit-product chain with an independent digit walk
    rec = persistence(277777788888899)
    assert rec.l == 11
    for a, b in zip(rec.orbit, rec.orbit[1:]):
        assert _naive_product_of_digits(a, 10) == b


def test_persistence_other_base():
    # base 2: any n with a zero bit collapses in one step
    assert persistence(5, 2).orbit == (5, 0)
    assert persistence(7, 2).orbit == (7, 1)


def test_practical_anchors():
    for n in (1, 2, 4, 6, 8, 12, 16, 18, 20, 28, 32, 36):
        assert is_practical(n), n
    for n in (3, 5, 7, 9, 10, 14, 15, 22, 70):
        assert not is_practical(n), n


def test_practical_criterion_matches_subset_sum():
    for n in range(1, 10001):
        assert is_practical_criterion(n) == is_practical_subset_sum(n), n


def test_practical_crossover_consistency():
    for n in range(1, 2001):
        assert is_practical(n, crossover=1) == is_practical(n, crossover=10**9)


def test_subset_sum_definition_spot_check():
    # direct check of the defining property for a few n
    def brute(n):
        divs = [d for d in range(1, n + 1) if n % d == 0]
        for target in range(1, n):
            hit = {0}
            for d in divs:
                hit |= {s + d for s in hit if s + d <= target}
            if target not in hit:
                return False
        return True

    for n in (1, 2, 3, 6, 10, 12, 28, 30, 70, 100):
        assert is_practical_subset_sum(n) == brute(n)


def test_central_binomial_factorization():
    for n in range(1, 121):
        val = math.comb(2 * n, n)
        factors = central_binomial_factors(n)
        assert reduce(lambda acc, pe: acc * pe[0] ** pe[1], factors, 1) == val
        assert all(e >= 1 for _, e in factors)
        primes = [p for p, _ in factors]
        assert primes == sorted(primes)


def test_qualifying_exponents_up_to_2_20():
    got = [n for n in (2**j for j in range(21)) if qualifies_central_binomial(n)]
    assert got == [1, 4, 256]
    # non powers of two never qualify
    assert not qualifies_central_binomial(3)
    assert not qualifies_central_binomial(12)


def test_central_binomial_implication_holds():
    for n in (4, 256):
        rec = central_binomial_practical(n)
        assert rec.qualifies
        assert not rec.practical
        assert rec.implication_ok
    assert central_binomial_practical(4).binomial == 70


def test_central_binomial_boundary_case():
    rec = central_binomial_practical(1)
    assert rec.qualifies and rec.practical
    assert rec.implication_ok is False
    assert rec.note


def test_central_binomial_nonqualifying():
    rec = central_binomial_practical(70)
    assert not rec.qualifies
    assert rec.implication_ok is None
    assert rec.practical  # C(140, 70) happens to be practical


def test_central_binomial_dict_uses_strings():
    d = central_binomial_practical(256).to_dict()
    assert isinstance(d["binomial"], str)
    assert d["binomial_digits"] == len(d["binomial"])

"""Digit-product persistence and practical numbers.

The digit-product map sends n to the product of its base-b digits; iterating
strictly decreases any n >= b, so every orbit stabilizes at a value below the
base.  Practicality (every smaller positive integer is a sum of distinct
divisors) is decided two ways: the subset-sum definition, and a growth test on
the prime factorization; both are exported and cross-checked in tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisViolated


def _digits(n, b):
    """Base-b digits of n >= 0, least significant first; 0 has digit [0]."""
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    return out


def sloane_map(n, b=10):
    """Product of the base-b digits of n."""
    if b < 2:
        raise ValueError("base must be at least 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    return math.prod(_digits(n, b))


@dataclass(frozen=True)
class PersistenceRecord:
    """Orbit of n under the digit-product map, up to its first fixed point.

    l is the minimal index from which the orbit is constant; a value that is
    already fixed (any single digit, and 0) has l = 0.
    """

    n: int
    base: int
    orbit: tuple
    l: int

    def to_dict(self):
        return {"n": self.n, "base": self.base, "orbit": list(self.orbit), "l": self.l}

    def to_csv_row(self):
        return f"{self.n},{self.base},{self.l},{';'.join(str(v) for v in self.orbit)}"


def persistence(n, b=10):
    """Iterate the digit-product map until it stops moving."""
    orbit = [n]
    while True:
        nxt = sloane_map(orbit[-1], b)
        if nxt == orbit[-1]:
            break
        orbit.append(nxt)
    return PersistenceRecord(n, b, tuple(orbit), len(orbit) - 1)


# ---------------------------------------------------------------------------
# practical numbers
# ---------------------------------------------------------------------------

def _divisors(n):
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def is_practical_subset_sum(n):
    """Definitional test: every integer in 1..n-1 is a sum of distinct divisors.

    Reachable sums are tracked as a bitmask; bit s is set once s is a sum of
    distinct divisors already processed.
    """
    if n < 1:
        return False
    if n == 1:
        return True
    mask = 1
    for d in _divisors(n):
        mask |= mask << d
    need = ((1 << (n - 1)) - 1) << 1  # bits 1..n-1
    return mask & need == need


def _factorize(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def practical_from_factors(factors):
    """Growth test on an ascending prime factorization [(p, e), ...]:
    each prime must not exceed 1 + the divisor sum of what came before."""
    if not factors:
        return True  # n = 1
    if factors[0][0] != 2:
        return False
    sigma = 1
    for p, e in factors:
        if p > sigma + 1:
            return False
        sigma *= (p ** (e + 1) - 1) // (p - 1)
    return True


def is_practical_criterion(n):
    """Growth test after factoring n by trial division."""
    if n < 1:
        return False
    return practical_from_factors(_factorize(n))


def is_practical(n, crossover=10**4):
    """Practicality, by subset-sum below the crossover and by the growth
    criterion above it."""
    if n <= crossover:
        return is_practical_subset_sum(n)
    return is_practical_criterion(n)


# ---------------------------------------------------------------------------
# central binomial coefficients
# ---------------------------------------------------------------------------

def central_binomial_factors(n):
    """Prime factorization of C(2n, n) without factoring the value itself.

    Every prime factor is at most 2n; its exponent is the count of carries,
    computed as sum over j of floor(2n/p^j) - 2*floor(n/p^j).
    """
    if n == 0:
        return []
    sieve = bytearray([1]) * (2 * n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(math.isqrt(2 * n)) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    out = []
    for p in range(2, 2 * n + 1):
        if not sieve[p]:
            continue
        e, pk = 0, p
        while pk <= 2 * n:
            e += (2 * n) // pk - 2 * (n // pk)
            pk *= p
        if e:
            out.append((p, e))
    return out


def qualifies_central_binomial(n):
    """n is a power of 2 whose base-3 digits avoid 2."""
    if n < 1 or n & (n - 1):
        return False
    return 2 not in _digits(n, 3)


@dataclass(frozen=True)
class CentralBinomialRecord:
    """C(2n, n) practicality together with the digit-condition link.

    implication_ok is None when n does not qualify.  n = 1 is the known
    boundary exception: it qualifies but C(2, 1) = 2 is practical, so the
    implication only starts at n = 4.
    """

    n: int
    binomial: int
    practical: bool
    qualifies: bool
    implication_ok: bool | None
    note: str = ""

    def to_dict(self):
        out = {
            "n": self.n,
            "binomial": str(self.binomial),
            "binomial_digits": len(str(self.binomial)),
            "practical": self.practical,
            "qualifies": self.qualifies,
            "implication_ok": self.implication_ok,
        }
        if self.note:
            out["note"] = self.note
        return out


def central_binomial_practical(n):
    """Test C(2n, n) for practicality and check the digit-condition link.

    For qualifying n > 1 (a power of 2 with no ternary digit 2), practicality
    of C(2n, n) would refute a proved implication, so it raises
    HypothesisViolated.  Practicality is decided on the factored form, which
    never requires factoring the binomial value.
    """
    if n < 1:
        raise ValueError("n must be positive")
    value = math.comb(2 * n, n)
    factors = central_binomial_factors(n)
    practical = practical_from_factors(factors)
    q = qualifies_central_binomial(n)
    note = ""
    ok = None
    if q:
        if n == 1:
            ok = not practical
            note = "n = 1 qualifies but C(2, 1) = 2 is practical; the implication starts at n = 4"
        elif practical:
            raise HypothesisViolated(
                f"C({2 * n}, {n}) is practical although n = {n} qualifies; "
                "this indicates an implementation bug"
            )
        else:
            ok = True
    return CentralBinomialRecord(n, value, practical, q, ok, note)

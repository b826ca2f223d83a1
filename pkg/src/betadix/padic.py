"""Completions at degree-one unramified primes, with truncated log/exp.

A prime above the rational prime q is modeled by a Hensel-lifted root of the
defining polynomial mod q^K: evaluation of coordinate polynomials at the root
is the embedding into Z/q^K, and q-valuations of the values are the prime
valuations.  Only simple roots (degree-one, unramified primes) are modeled;
anything else is flagged or rejected depending on mode.

log and exp are computed from their power series with an enlarged working
modulus that absorbs the valuation lost to dividing by n (at most log_q n) or
by n! (at most (n-1)/(q-1)), so returned values are exact at the stated
precision.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
import math

from .errors import (
    NotCoprime,
    NotDegreeOne,
    OutOfDomain,
    PrecisionExhausted,
    PrecisionMismatch,
    RamifiedPrime,
)


def qval(n, q):
    """q-adic valuation of a nonzero integer; None for 0 (infinite)."""
    if n == 0:
        return None
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def hensel_lift(f, r, q, K):
    """Lift a simple root r of f mod q to a root mod q^K by Newton doubling."""

    def ev(c, x, m):
        acc = 0
        for co in reversed(c):
            acc = (acc * x + co) % m
        return acc

    fprime = [i * f[i] for i in range(1, len(f))]
    if ev(fprime, r, q) % q == 0:
        raise RamifiedPrime(f"root {r} of f mod {q} is not simple")
    k = 1
    cur = r % q
    while k < K:
        k = min(2 * k, K)
        m = q**k
        fp = ev(fprime, cur, m)
        cur = (cur - ev(f, cur, m) * pow(fp, -1, m)) % m
    return cur


@dataclass(frozen=True)
class PrimeIdealModel:
    """Degree-one unramified prime above q in the ring, at precision K.

    ``root`` satisfies f(root) = 0 mod q^K; ``e`` is the valuation of the base
    element beta at this prime.  Models are immutable; raising precision
    returns a new model.
    """

    ring: object
    q: int
    root: int
    K: int
    e: int
    degree_one: bool = True
    unramified: bool = True

    @property
    def modulus(self):
        return self.q**self.K

    def with_precision(self, K):
        if K <= self.K:
            return replace(self, K=K, root=self.root % self.q**K)
        root = hensel_lift(list(self.ring.f), self.root % self.q, self.q, K)
        return replace(self, K=K, root=root)

    def embed(self, alpha):
        """Image of alpha in Z/q^K under x -> root."""
        return self.ring.element(alpha).evaluate_mod(self.root, self.modulus)

    def to_dict(self):
        return {
            "q": self.q,
            "root": self.root,
            "K": self.K,
            "e": self.e,
            "degree_one": self.degree_one,
            "unramified": self.unramified,
        }

    @classmethod
    def from_dict(cls, ring, data):
        return cls(
            ring,
            data["q"],
            data["root"],
            data["K"],
            data["e"],
            data.get("degree_one", True),
            data.get("unramified", True),
        )


def _factor(n):
    """Trial-division factorization, adequate for desk-scale norms."""
    n = abs(n)
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primes_above(ring, beta, K=64, strict=True):
    """Models for every prime dividing beta, from the factorization of |N(beta)|.

    For each prime q | N(beta), the simple roots of f mod q give the degree-one
    unramified primes; the valuation e at each is read off by evaluating beta at
    the lifted root.  If the per-root valuations do not account for all of
    v_q(N(beta)), the remainder sits in a ramified or higher-degree prime:
    strict mode raises (RamifiedPrime when f has a repeated root mod q touching
    beta, NotDegreeOne otherwise); exploration mode returns a flagged
    placeholder model so the caller can see what was skipped.
    """
    beta = ring.element(beta)
    nb = ring.norm(beta)
    if nb == 0:
        raise NotCoprime("beta has norm 0")
    f = list(ring.f)
    fprime = [i * f[i] for i in range(1, len(f))]

    def ev(c, x, m):
        acc = 0
        for co in reversed(c):
            acc = (acc * x + co) % m
        return acc

    models = []
    for q, vq_norm in sorted(_factor(nb).items()):
        simple, repeated = [], []
        for r in range(q):
            if ev(f, r, q) == 0:
                (repeated if ev(fprime, r, q) == 0 else simple).append(r)
        found = 0
        KK = max(K, vq_norm + 1)
        for r in simple:
            model = PrimeIdealModel(ring, q, hensel_lift(f, r, q, KK), KK, 0)
            val = qval(model.embed(beta), q)
            while val is None:
                # beta sits deeper than the precision; lift further
                KK *= 2
                model = model.with_precision(KK)
                val = qval(model.embed(beta), q)
                if KK > 64 * K:
                    raise PrecisionExhausted(f"valuation of beta at {q} exceeds {KK // 2}")
            if val > 0:
                models.append(replace(model, e=val))
                found += val
        if found < vq_norm:
            rep_touches_beta = any(ev(list(beta.coeffs), r, q) == 0 for r in repeated)
            if strict:
                if rep_touches_beta:
                    raise RamifiedPrime(
                        f"f has a repeated root mod {q} dividing into beta"
                    )
                raise NotDegreeOne(
                    f"a prime above {q} dividing beta has residue degree > 1"
                    + (" or is ramified" if repeated else "")
                )
            # ramified: degree-one but not unramified; otherwise inertia > 1
            models.append(
                PrimeIdealModel(
                    ring,
                    q,
                    repeated[0] if rep_touches_beta else -1,
                    0,
                    vq_norm - found,
                    degree_one=rep_touches_beta,
                    unramified=not rep_touches_beta,
                )
            )
    return models


def vp(alpha, model, max_doublings=6):
    """Valuation of a nonzero element at the model's prime.

    If the value vanishes at the current precision the model is re-lifted at
    doubled precision, up to a cap; hitting the cap suggests alpha = 0.
    """
    alpha = model.ring.element(alpha)
    if not alpha:
        raise OutOfDomain("valuation of 0 is infinite")
    if not (model.degree_one and model.unramified):
        raise NotDegreeOne("valuations need a degree-one unramified model")
    cur = model
    for _ in range(max_doublings + 1):
        v = qval(cur.embed(alpha), cur.q)
        if v is not None and v < cur.K:
            return v
        cur = cur.with_precision(2 * cur.K)
    raise PrecisionExhausted(
        f"valuation at {model.q} still >= {cur.K // 2} after {max_doublings} doublings"
    )


# ---------------------------------------------------------------------------
# truncated p-adic integers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PadicInt:
    """Residue mod q^K with explicit precision.

    Mixed arithmetic with plain ints reduces them; arithmetic between
    PadicInts requires matching (q, K) -- lower precision explicitly with
    at_precision first.
    """

    q: int
    K: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.q**self.K)

    def _match(self, other):
        if isinstance(other, int):
            return PadicInt(self.q, self.K, other)
        if isinstance(other, PadicInt):
            if (other.q, other.K) != (self.q, self.K):
                raise PrecisionMismatch(
                    f"operands live in Z/{self.q}^{self.K} and Z/{other.q}^{other.K}"
                )
            return other
        return None

    def __add__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return PadicInt(self.q, self.K, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return PadicInt(self.q, self.K, self.value - o.value)

    def __rsub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return PadicInt(self.q, self.K, self.value * o.value)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        return PadicInt(self.q, self.K, pow(self.value, n, self.q**self.K))

    def valuation(self):
        """min(v_q(value), K): a zero residue only certifies valuation >= K."""
        v = qval(self.value, self.q)
        return self.K if v is None else min(v, self.K)

    def at_precision(self, K):
        if K > self.K:
            raise PrecisionMismatch("cannot raise precision of a truncated value")
        return PadicInt(self.q, K, self.value)

    def to_dict(self):
        return {"q": self.q, "K": self.K, "value": str(self.value)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["q"], data["K"], int(data["value"]))


def padic_log(x):
    """log of a unit x with v_q(x - 1) >= 2, exact mod q^K.

    Alternating series sum (-1)^(n+1) (x-1)^n / n; the working modulus carries
    floor(log_q nmax) guard digits, the worst valuation loss from the division
    by n.  Terms stop once m*n - log_q(n) >= K, a bound increasing in n.
    """
    q, K = x.q, x.K
    mK = q**K
    z = (x.value - 1) % mK
    if z == 0:
        return PadicInt(q, K, 0)
    m = qval(z, q)
    if m < 2:
        raise OutOfDomain(f"log needs v_q(x-1) >= 2, got {m}")
    # first n with q^(m n - K) >= n; from there on every term has valuation
    # m n - v_q(n) >= K, and the test stays true as n grows
    nmax = 1
    while m * nmax < K or q ** (m * nmax - K) < nmax:
        nmax += 1
    guard = max(1, math.ceil(math.log(nmax + 1, q)))
    W = K + guard
    mW = q**W
    zp, acc = 1, 0
    for n in range(1, nmax + 1):
        zp = zp * z % mW
        v = qval(n, q) or 0
        t = zp // q**v if v else zp
        t = t * pow(n // q**v, -1, mW) % mW
        acc = (acc + t) if n % 2 else (acc - t)
    return PadicInt(q, K, acc)


def padic_exp(x):
    """exp of x with v_q(x) >= 1 (q odd) or >= 2 (q = 2), exact mod q^K.

    Series sum x^n / n!; the working modulus carries v_q(nmax!) guard digits.
    Terms stop once v*n - (n-1)/(q-1) >= K, increasing in n since v > 1/(q-1).
    """
    q, K = x.q, x.K
    y = x.value
    if y == 0:
        return PadicInt(q, K, 1)
    v = qval(y, q)
    need = 2 if q == 2 else 1
    if v < need:
        raise OutOfDomain(f"exp needs v_q(x) >= {need} for q = {q}, got {v}")
    nmax = 1
    while v * nmax * (q - 1) - (nmax - 1) < K * (q - 1):
        nmax += 1
    # exact Legendre count of q in nmax!
    guard, pk = 0, q
    while pk <= nmax:
        guard += nmax // pk
        pk *= q
    W = K + guard
    mW = q**W
    acc, ypow = 1, 1
    vf, uf = 0, 1  # n! = q^vf * uf with uf a unit mod q^W
    for n in range(1, nmax + 1):
        ypow = ypow * y % mW
        vn = qval(n, q) or 0
        vf += vn
        uf = uf * (n // q**vn) % mW
        t = ypow // q**vf if vf else ypow
        acc += t * pow(uf, -1, mW) % mW
    return PadicInt(q, K, acc)


# ---------------------------------------------------------------------------
# unit orders and the interpolation of n -> alpha^(l + u n)
# ---------------------------------------------------------------------------

def _divisors_sorted(n):
    ds = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            ds.append(i)
            if i != n // i:
                ds.append(n // i)
        i += 1
    return sorted(ds)


def unit_order_u(alpha, model):
    """Least u >= 1 with v(alpha^u - 1) >= 2: the order of alpha mod q^2.

    Brute force over the divisors of q(q-1), the order of the unit group of
    Z/q^2.  Requires alpha to be a unit at the prime (NotCoprime otherwise).
    """
    q = model.q
    m = q * q
    a = model.ring.element(alpha).evaluate_mod(model.root, m)
    if a % q == 0:
        raise NotCoprime(f"alpha is divisible by the prime above {q}")
    for t in _divisors_sorted(q * (q - 1)):
        if pow(a, t, m) == 1:
            return t
    raise ArithmeticError("order search failed; unit group order violated")


@dataclass(frozen=True)
class UnitOrderSummary:
    per_prime: tuple
    product: int
    lcm: int

    def to_dict(self):
        return {
            "per_prime": [{"q": q, "u": u} for q, u in self.per_prime],
            "product": self.product,
            "lcm": self.lcm,
        }


def unit_orders(alpha, models):
    """Per-prime unit orders with their product and lcm.

    The product is the combined exponent step used downstream; the lcm would
    also work and is reported as a smaller alternative.
    """
    pairs = []
    prod, lc = 1, 1
    for mdl in models:
        u = unit_order_u(alpha, mdl)
        pairs.append((mdl.q, u))
        prod *= u
        lc = math.lcm(lc, u)
    return UnitOrderSummary(tuple(pairs), prod, lc)


def combined_u(alpha, models):
    """Product of per-prime unit orders: alpha^u is 1 mod q^2 at every prime."""
    return unit_orders(alpha, models).product


def interpolate_G(alpha, l, u, x, model):
    """The analytic interpolation G_l(x) = alpha^l * exp(x * log(alpha^u)) at the
    model's prime, exact mod q^K.

    At integer x = n this equals alpha^(l + u n); general x in Z_q extends the
    power sequence along the substream l mod u.
    """
    q, K = model.q, model.K
    mod = q**K
    a = model.embed(alpha)
    if a % q == 0:
        raise NotCoprime(f"alpha is divisible by the prime above {q}")
    if isinstance(x, PadicInt):
        if (x.q, x.K) != (q, K):
            raise PrecisionMismatch("x must live at the model's (q, K)")
        xv = x
    else:
        xv = PadicInt(q, K, x)
    L = padic_log(PadicInt(q, K, pow(a, u, mod)))
    return PadicInt(q, K, pow(a, l, mod)) * padic_exp(xv * L)


def lipschitz_constants(alpha, u, models):
    """(m0, n0) for the interpolation family: shifts by multiples of u move
    values by a controlled valuation.

    m0 = 0: matching digits need no extra congruence on the exponents.
    n0 = max over primes of v(log(alpha^u)): the valuation offset in
    v(alpha^(u n) - alpha^(u m)) = v(n - m) + v(log(alpha^u)).
    """
    n0 = 0
    for mdl in models:
        a = mdl.embed(alpha)
        if a % mdl.q == 0:
            raise NotCoprime(f"alpha is divisible by the prime above {mdl.q}")
        L = padic_log(PadicInt(mdl.q, mdl.K, pow(a, u, mdl.modulus)))
        lv = L.valuation()
        if lv >= mdl.K:
            raise PrecisionExhausted("log(alpha^u) vanished at model precision")
        n0 = max(n0, lv)
    return (0, n0)

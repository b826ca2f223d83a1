"""Counting exponents n whose expansion of alpha^n omits a digit.

The count M_b(N) = #{1 <= n <= N : expansion of alpha^n omits digit b} is
computed exactly, reported at checkpoint cutoffs (powers of |N(beta)| plus the
final N), and compared against N^sigma where sigma = log(m-1)/log m for
m = |N(beta)|.  A gap diagnostic verifies the divisibility law forced on
exponent pairs whose powers share a digit prefix.

Two independent routes exist for the rational case: an incremental fast path
(multiply the previous power, convert once) and a deliberately naive oracle
(recompute p**n from scratch, extract digits by repeated division).
"""
from __future__ import annotations

import json
import math
import os
import sys
import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext

from gmpy2 import mpz

from .errors import (
    HypothesisViolated,
    NormTooSmall,
    NotCoprime,
    OutOfDomain,
    RootOfUnity,
)
from .expansion import beta_digits, beta_expansion, omits_digit, radix_expansion
from .padic import lipschitz_constants, primes_above, unit_orders, vp
from .residue import DigitSet, ResidueTable, digit_set_canonical
from .ring import NumberRing

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_HIT_CAP = 10**6  # serialized hit lists are truncated past this


# ---------------------------------------------------------------------------
# sigma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SigmaValue:
    """sigma = log(m-1)/log m, kept as the exact integer pair plus a
    30-significant-digit decimal rendering."""

    m: int
    text: str

    def decimal(self):
        return Decimal(self.text)

    def to_dict(self):
        return {"log_of": self.m - 1, "log_base": self.m, "decimal": self.text}


def sigma_of_norm(m):
    if m < 2:
        raise NormTooSmall(f"|N(beta)| = {m}, need >= 2")
    if m == 2:
        return SigmaValue(2, "0")
    with localcontext() as ctx:
        ctx.prec = 45
        val = Decimal(m - 1).ln() / Decimal(m).ln()
        ctx.prec = 30
        val = +val
    return SigmaValue(m, str(val))


def sigma(ring, beta):
    """The counting exponent of the base beta."""
    return sigma_of_norm(abs(ring.norm(ring.element(beta))))


def _ratio_text(count, cutoff, sig):
    if count == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = 45
        val = Decimal(count) / Decimal(cutoff) ** sig.decimal()
        ctx.prec = 30
        return str(+val)


# ---------------------------------------------------------------------------
# requests and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountRequest:
    """Exponent-count problem: digits of alpha^n over (beta, dset), omitted
    digit index b, exponents 1..N.

    mode "radix-only" scans the finite digit word (the expansion must
    terminate); "beta-adic" scans the full eventually periodic stream, where
    the implicit zero tail counts as containing the zero digit.  strict mode
    refuses bases whose primes fall outside the degree-one unramified theory.
    """

    ring: object
    alpha: object
    beta: object
    dset: object
    b: int
    N: int
    mode: str = "radix-only"
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "alpha", self.ring.element(self.alpha))
        object.__setattr__(self, "beta", self.ring.element(self.beta))
        mode = {"radix": "radix-only"}.get(self.mode, self.mode)
        if mode not in ("radix-only", "beta-adic"):
            raise ValueError(f"mode must be radix-only or beta-adic, got {self.mode!r}")
        object.__setattr__(self, "mode", mode)

    def to_dict(self):
        return {
            "ring": self.ring.to_dict(),
            "alpha": list(self.alpha.coeffs),
            "beta": list(self.beta.coeffs),
            "digit_set": self.dset.to_dict(),
            "b": self.b,
            "N": self.N,
            "mode": self.mode,
            "strict": self.strict,
        }

    def fingerprint(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class BoundReport:
    """Counts at checkpoint cutoffs with their N^sigma ratios.

    counts is non-decreasing; hits has length equal to the final count.
    narkiewicz_ok is set only for the (alpha=2, beta=3, b=2) rational case.
    """

    request: CountRequest
    sigma: SigmaValue
    counts: tuple
    ratios: tuple
    hits: tuple
    narkiewicz_ok: bool | None = None
    notes: tuple = ()
    elapsed: float = 0.0

    @property
    def count(self):
        return len(self.hits)

    def to_dict(self):
        # elapsed is deliberately not serialized: reports must be byte-stable
        out = {
            "request": self.request.to_dict(),
            "sigma": self.sigma.to_dict(),
            "counts": [[n, c] for n, c in self.counts],
            "ratios": list(self.ratios),
            "count": self.count,
            "hits": list(self.hits[:_HIT_CAP]),
            "notes": list(self.notes),
        }
        if len(self.hits) > _HIT_CAP:
            out["hits_truncated"] = True
        if self.narkiewicz_ok is not None:
            out["narkiewicz_ok"] = self.narkiewicz_ok
        return out

    def to_csv(self):
        """Plot-ready table: one row per checkpoint cutoff."""
        final = self.request.N
        lines = ["N,M,ratio,checkpoint"]
        for (n, c), r in zip(self.counts, self.ratios):
            kind = "final" if n == final else "power"
            lines.append(f"{n},{c},{r},{kind}")
        return "\n".join(lines) + "\n"

    def hits_text(self):
        return "\n".join(str(n) for n in self.hits) + ("\n" if self.hits else "")


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _totient(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        out *= m - 1
    return out


def _order_search_bound(d):
    """2 * max{t : totient(t) <= d}: any root of unity in a degree-d ring has
    order within the undoubled bound; the factor 2 is slack."""
    best = 1
    for t in range(1, 2 * d * d + 3):
        if _totient(t) <= d:
            best = t
    return 2 * best


def _reject_roots_of_unity(ring, alpha):
    if not alpha:
        raise OutOfDomain("alpha must be nonzero")
    if abs(ring.norm(alpha)) != 1:
        return
    one = ring.one()
    cur = alpha
    for t in range(1, _order_search_bound(ring.degree) + 1):
        if cur == one:
            raise RootOfUnity(f"alpha has finite order {t}")
        cur = cur * alpha


def _validate(req):
    """Hypothesis checks; returns (models, notes) without counting anything."""
    ring = req.ring
    if req.N < 1:
        raise ValueError("N must be positive")
    if not 0 <= req.b < len(req.dset):
        raise OutOfDomain(f"digit index {req.b} outside 0..{len(req.dset) - 1}")
    if abs(ring.norm(req.beta)) < 2:
        raise NormTooSmall("|N(beta)| must be at least 2")
    _reject_roots_of_unity(ring, req.alpha)
    notes = []
    models = primes_above(ring, req.beta, strict=req.strict)
    for mdl in models:
        if mdl.degree_one and mdl.unramified:
            if vp(req.alpha, mdl) > 0:
                raise NotCoprime(
                    f"alpha and beta share the prime above {mdl.q}"
                )
        else:
            notes.append(
                f"prime above {mdl.q} is outside the degree-one unramified "
                "theory; coprimality not checked there"
            )
    if req.mode == "beta-adic" and req.b == req.dset.zero_index():
        notes.append(
            "beta-adic mode counts the implicit zero tail as containing the "
            "zero digit, so only identically-zero expansions omit it"
        )
    return models, notes


# ---------------------------------------------------------------------------
# rational fast path and naive oracle
# ---------------------------------------------------------------------------

def _digits_lsf(n, q):
    """Base-q digits of n >= 0, least significant first, by halving splits."""
    if n < q:
        return [n]
    pows = [q]
    while pows[-1] * pows[-1] <= n:
        pows.append(pows[-1] * pows[-1])

    def rec(m, i):
        if i < 0:
            return [m]
        hi, lo = divmod(m, pows[i])
        low = rec(lo, i - 1)
        if hi:
            low += [0] * ((1 << i) - len(low))
            return low + rec(hi, i - 1)
        return low

    return rec(n, len(pows) - 1)


def _scan_omits(value, q, b):
    """True iff the base-q digit word of value omits digit b."""
    if q <= 36:
        return _ALPHABET[b] not in value.digits(q)
    return b not in _digits_lsf(int(value), q)


def _fast_block(args):
    p, q, b, start, end = args
    cur = mpz(p) ** start
    hits = []
    for n in range(start, end + 1):
        if _scan_omits(cur, q, b):
            hits.append(n)
        cur *= p
    return hits


def _general_block(args):
    f, acoeffs, bcoeffs, digit_coeffs, canonical, b, radix, start, end = args
    ring = NumberRing(tuple(f))
    alpha = ring.element(list(acoeffs))
    beta = ring.element(list(bcoeffs))
    dset = DigitSet(ring, tuple(ring.element(list(c)) for c in digit_coeffs), canonical)
    table = ResidueTable(ring, beta, dset)
    cur = alpha**start
    hits = []
    for n in range(start, end + 1):
        if radix:
            word = radix_expansion(cur, table)
            omit = b not in word
        else:
            omit = omits_digit(beta_expansion(cur, table), b)
        if omit:
            hits.append(n)
        cur = cur * alpha
    return hits


def _blocks(N, jobs):
    size = max(1, -(-N // jobs))
    out = []
    start = 1
    while start <= N:
        out.append((start, min(start + size - 1, N)))
        start += size
    return out


def _power_marks(m, N):
    marks = {N}
    v = m
    while v <= N:
        marks.add(v)
        v *= m
    return marks


def _load_checkpoint(path, fingerprint, N):
    if not path or not os.path.exists(path):
        return 1, []
    with open(path) as fh:
        data = json.load(fh)
    if data.get("fingerprint") != fingerprint or data.get("N") != N:
        return 1, []
    return data["next_n"], list(data["hits"])


def _save_checkpoint(path, fingerprint, N, next_n, hits):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"fingerprint": fingerprint, "N": N, "next_n": next_n, "hits": hits}, fh)
    os.replace(tmp, path)


def naive_digit_presence(p, q, N):
    """Independent slow route: p**n recomputed from scratch for every n, with
    digits extracted one at a time by repeated division."""
    out = []
    for n in range(1, N + 1):
        v = p**n
        seen = set()
        while v:
            v, r = divmod(v, q)
            seen.add(r)
        out.append(frozenset(seen))
    return out


def count_omitting_naive(p, q, b, N):
    """Hit list via the naive route, for cross-checking the fast path."""
    return [n for n, s in enumerate(naive_digit_presence(p, q, N), start=1) if b not in s]


def rational_digit_presence(p, q, N):
    """Per-exponent digit sets via the incremental fast route."""
    out = []
    cur = mpz(p)
    inv = {c: v for v, c in enumerate(_ALPHABET)}
    for _ in range(N):
        if q <= 36:
            out.append(frozenset(inv[c] for c in cur.digits(q)))
        else:
            out.append(frozenset(_digits_lsf(int(cur), q)))
        cur *= p
    return out


# ---------------------------------------------------------------------------
# the counting entry point
# ---------------------------------------------------------------------------

def _fast_applicable(req):
    if req.ring.degree != 1 or req.mode != "radix-only" or not req.dset.canonical:
        return False
    p, q = req.alpha.coeffs[0], req.beta.coeffs[0]
    return q >= 2 and p >= 2


def count_omitting(req, jobs=1, progress=False, checkpoint_path=None):
    """Count the exponents n in 1..N whose power alpha^n omits digit b.

    Runs the incremental fast path for positive rational (p, q) requests and
    the per-exponent expansion loop otherwise.  jobs > 1 splits 1..N into
    contiguous blocks, each reseeded with its own alpha**start; the merge is
    deterministic.  A checkpoint file (sequential runs only) makes long counts
    resumable; progress lines go to standard error at every |N(beta)|-power.
    """
    t0 = time.monotonic()
    models, notes = _validate(req)
    m = abs(req.ring.norm(req.beta))
    sig = sigma_of_norm(m)
    fast = _fast_applicable(req)
    fp = req.fingerprint()
    if jobs > 1 and checkpoint_path:
        notes = notes + ["checkpoint file ignored: block-parallel runs are not resumable"]
        checkpoint_path = None

    if jobs > 1:
        if fast:
            p, q = int(req.alpha.coeffs[0]), int(req.beta.coeffs[0])
            work = [(p, q, req.b, s, e) for s, e in _blocks(req.N, jobs)]
            worker = _fast_block
        else:
            work = [
                (
                    tuple(req.ring.f),
                    tuple(req.alpha.coeffs),
                    tuple(req.beta.coeffs),
                    [list(d.coeffs) for d in req.dset.digits],
                    req.dset.canonical,
                    req.b,
                    req.mode == "radix-only",
                    s,
                    e,
                )
                for s, e in _blocks(req.N, jobs)
            ]
            worker = _general_block
        hits = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for block in pool.map(worker, work):
                hits.extend(block)
    else:
        start, hits = _load_checkpoint(checkpoint_path, fp, req.N)
        marks = _power_marks(m, req.N)
        if fast:
            p, q = int(req.alpha.coeffs[0]), int(req.beta.coeffs[0])
            cur = mpz(p) ** start
            step = lambda v: v * p
            omit = lambda v: _scan_omits(v, q, req.b)
        else:
            table = ResidueTable(req.ring, req.beta, req.dset)
            cur = req.alpha**start
            step = lambda v: v * req.alpha
            if req.mode == "radix-only":
                omit = lambda v: req.b not in radix_expansion(v, table)
            else:
                omit = lambda v: omits_digit(beta_expansion(v, table), req.b)
        for n in range(start, req.N + 1):
            if omit(cur):
                hits.append(n)
            if n in marks:
                if progress:
                    print(f"checkpoint n={n} M={len(hits)}", file=sys.stderr)
                if checkpoint_path:
                    _save_checkpoint(checkpoint_path, fp, req.N, n + 1, hits)
            cur = step(cur)

    cutoffs = sorted(_power_marks(m, req.N))
    counts = tuple((n, bisect_right(hits, n)) for n in cutoffs)
    ratios = tuple(_ratio_text(c, n, sig) for n, c in counts)
    nk = None
    if (
        fast
        and req.alpha.coeffs[0] == 2
        and req.beta.coeffs[0] == 3
        and req.b == 2
    ):
        nk = _max_hit_ratio(hits, sig)[0] < Decimal("1.62")
    return BoundReport(
        request=req,
        sigma=sig,
        counts=counts,
        ratios=ratios,
        hits=tuple(hits),
        narkiewicz_ok=nk,
        notes=tuple(notes),
        elapsed=time.monotonic() - t0,
    )


# ---------------------------------------------------------------------------
# the 1.62 bound for powers of 2 in base 3
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NarkiewiczReport:
    """M(N') <= 1.62 N'^sigma checked for every cutoff N' up to N."""

    N: int
    ok: bool
    bound: str
    max_ratio: str
    argmax: int
    table: tuple

    def to_dict(self):
        return {
            "N": self.N,
            "ok": self.ok,
            "bound": self.bound,
            "max_ratio": self.max_ratio,
            "argmax": self.argmax,
            "table": [
                {"n": n, "M": c, "ratio": r} for n, c, r in self.table
            ],
        }


def _max_hit_ratio(hits, sig):
    """Max of M(N')/N'^sigma over every cutoff N' >= 1.

    Between hits the count is constant while N'^sigma grows, so the maximum
    over all cutoffs is attained at a hit (or is 0 with no hits at all);
    checking hit positions therefore checks every cutoff.
    """
    best, arg, rows = Decimal(0), 1, []
    for i, n in enumerate(hits):
        text = _ratio_text(i + 1, n, sig)
        rows.append((n, i + 1, text))
        val = Decimal(text)
        if val > best:
            best, arg = val, n
    return best, arg, rows


def narkiewicz_check(N, jobs=1):
    """Verify M(N') <= 1.62 N'^sigma for every N' <= N, for powers of 2
    omitting ternary digit 2; reports the max ratio and where it occurs."""
    ring = NumberRing((0, 1))
    req = CountRequest(
        ring, 2, 3, digit_set_canonical(ring, ring.element(3)), 2, N
    )
    report = count_omitting(req, jobs=jobs)
    best, arg, rows = _max_hit_ratio(list(report.hits), report.sigma)
    return NarkiewiczReport(
        N=N,
        ok=best < Decimal("1.62"),
        bound="1.62",
        max_ratio=str(best),
        argmax=arg,
        table=tuple(rows),
    )


# ---------------------------------------------------------------------------
# exponent-gap diagnostic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GapReport:
    """Divisibility law for exponent pairs sharing a k-digit prefix.

    Powers alpha^(l + u n) and alpha^(l + u m) with the same first k digits
    force gap_modulus | (n - m); per digit word and window of
    prod q^(k e) consecutive n, at most c0_tilde exponents can share a word.
    """

    k: int
    u: int
    m0: int
    n0: int
    norm: int
    c0_tilde: int
    c0: int
    gap_modulus: int
    per_class_cap: int
    window: int | None
    max_class_size: int | None
    class_size_bound: int | None
    checked: int
    matched: int
    violations: int
    unit_orders: tuple
    lcm_u: int

    def to_dict(self):
        return {
            "k": self.k,
            "u": self.u,
            "m0": self.m0,
            "n0": self.n0,
            "norm": self.norm,
            "c0_tilde": self.c0_tilde,
            "c0": self.c0,
            "gap_modulus": self.gap_modulus,
            "per_class_cap": self.per_class_cap,
            "window": self.window,
            "max_class_size": self.max_class_size,
            "class_size_bound": self.class_size_bound,
            "checked": self.checked,
            "matched": self.matched,
            "violations": self.violations,
            "unit_orders": [{"q": q, "u": u} for q, u in self.unit_orders],
            "lcm_u": self.lcm_u,
        }


def verify_gap_lemma(
    alpha,
    beta,
    dset=None,
    k=1,
    sample=None,
    nmax=None,
    K=64,
    strict=True,
    class_window_cap=10000,
):
    """Check the exponent-gap divisibility on sampled or exhaustive pairs.

    For every l < u and every pair m < n drawn from sample (or all pairs up to
    nmax), if alpha^(l+un) and alpha^(l+um) share their first k digits and
    n = m mod norm^m0, then prod q^(max(k e - n0, 0)) must divide n - m.  Any
    counterexample is an implementation bug (the law is a theorem) and raises
    HypothesisViolated.  k = 0 is vacuous: every pair matches, nothing is
    asserted.
    """
    ring = alpha.ring
    beta = ring.element(beta)
    if dset is None:
        dset = digit_set_canonical(ring, beta)
    table = ResidueTable(ring, beta, dset)
    models = [
        mdl
        for mdl in primes_above(ring, beta, K=K, strict=strict)
        if mdl.degree_one and mdl.unramified
    ]
    orders = unit_orders(alpha, models)
    u = orders.product
    m0, n0 = lipschitz_constants(alpha, u, models)
    qs = [mdl.q for mdl in models]
    es = [mdl.e for mdl in models]
    norm = abs(ring.norm(beta))
    c0_tilde = math.prod(qs) ** n0
    c0 = u * norm**m0 * c0_tilde
    gap_modulus = math.prod(q ** max(k * e - n0, 0) for q, e in zip(qs, es))
    window = math.prod(q ** (k * e) for q, e in zip(qs, es))
    class_bound = math.prod(q ** min(k * e, n0) for q, e in zip(qs, es))

    if sample is None:
        if nmax is None:
            raise ValueError("need either sample pairs or nmax")
        ns = list(range(1, nmax + 1))
        pairs = [(a, b) for b in ns for a in range(1, b)]
    else:
        pairs = [(min(a, b), max(a, b)) for a, b in sample if a != b]
        ns = sorted({x for pair in pairs for x in pair})

    checked = matched = 0
    violations = []
    congr = norm**m0
    if k > 0 and pairs:
        alpha_u = alpha**u
        for l in range(u):
            words = {}
            if sample is None:
                cur = (alpha**l if l else ring.one()) * alpha_u
                for n in ns:
                    words[n] = tuple(beta_digits(cur, table, k))
                    cur = cur * alpha_u
            else:
                for n in ns:
                    words[n] = tuple(beta_digits(alpha ** (l + u * n), table, k))
            for a, b in pairs:
                checked += 1
                if words[a] == words[b] and (b - a) % congr == 0:
                    matched += 1
                    if (b - a) % gap_modulus:
                        violations.append((l, a, b))

    max_class = None
    if k > 0 and window <= class_window_cap:
        max_class = 0
        alpha_u = alpha**u
        for l in range(u):
            tally = {}
            cur = alpha**l if l else ring.one()
            for _ in range(window):
                w = tuple(beta_digits(cur, table, k))
                tally[w] = tally.get(w, 0) + 1
                cur = cur * alpha_u
            max_class = max(max_class, max(tally.values()))
        if max_class > class_bound:
            violations.append(("class-size", max_class, class_bound))

    if violations:
        raise HypothesisViolated(
            f"gap law refuted on {len(violations)} case(s), first: {violations[0]}; "
            "this indicates an implementation bug"
        )
    return GapReport(
        k=k,
        u=u,
        m0=m0,
        n0=n0,
        norm=norm,
        c0_tilde=c0_tilde,
        c0=c0,
        gap_modulus=gap_modulus,
        per_class_cap=c0_tilde,
        window=window if k > 0 else None,
        max_class_size=max_class,
        class_size_bound=class_bound if k > 0 else None,
        checked=checked,
        matched=matched,
        violations=0,
        unit_orders=orders.per_prime,
        lcm_u=orders.lcm,
    )

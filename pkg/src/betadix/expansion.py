"""Digit expansions in base beta and canonical-number-system verdicts.

The digit-strip step sends alpha to (alpha - d)/beta where d is the unique
digit congruent to alpha mod beta.  Iterating yields the digit stream a_0,
a_1, ...; over a ring of finite degree the state sequence is eventually
periodic whenever it stays bounded, so the stream is stored as a (preperiod,
period) pair.  An empty period encodes an implicit all-zero tail (terminating
expansion), which requires 0 to be a digit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ClosureBudgetExceeded,
    NotTerminating,
    StateBudgetExceeded,
)
from .residue import ResidueTable, digit_set_canonical


@dataclass(frozen=True)
class BetaExpansion:
    """Eventually periodic digit stream of one element, as digit indices.

    The preperiod is minimal and the period is primitive, so the pair is a
    canonical form: equal streams compare equal.  period == () means the
    stream ends in zeros forever.
    """

    ring: object
    beta: object
    dset: object
    preperiod: tuple
    period: tuple

    def digit_at(self, i):
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            return self.dset.zero_index()
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, k):
        return tuple(self.digit_at(i) for i in range(k))

    def to_dict(self):
        return {"preperiod": list(self.preperiod), "period": list(self.period)}


def beta_digits(alpha, table, k):
    """First k digits (as indices) of alpha's expansion."""
    alpha = table.ring.element(alpha)
    out = []
    for _ in range(k):
        j = table.digit_index(alpha)
        out.append(j)
        alpha = table.strip(alpha, j)
    return out


def beta_expansion(alpha, table, state_budget=10**6):
    """Full expansion of alpha: strip digits until a state repeats.

    States are the successive quotients; the first repeated state closes the
    cycle.  The raw (preperiod, period) split is then normalized to minimal
    preperiod and primitive period.
    """
    ring = table.ring
    alpha = ring.element(alpha)
    seen = {}
    digits = []
    states = []
    cur = alpha
    while cur.coeffs not in seen:
        if len(states) >= state_budget:
            raise StateBudgetExceeded(
                f"more than {state_budget} distinct states; base may not be expansive"
            )
        seen[cur.coeffs] = len(states)
        states.append(cur)
        j = table.digit_index(cur)
        digits.append(j)
        cur = table.strip(cur, j)
    mu = seen[cur.coeffs]
    pre, per = digits[:mu], digits[mu:]
    zi = table.dset.zero_index()
    if states[mu] == ring.zero() and zi is not None:
        # terminating stream: the cycle is the fixed point 0 emitting digit 0
        per = []
    else:
        per = _primitive(per)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
    return BetaExpansion(ring, table.beta, table.dset, tuple(pre), tuple(per))


def _primitive(word):
    n = len(word)
    for length in range(1, n + 1):
        if n % length == 0 and word == word[:length] * (n // length):
            return word[:length]
    return word


def radix_expansion(alpha, table, state_budget=10**6):
    """Finite digit word of alpha (least significant first).

    Defined only when the stream terminates; otherwise NotTerminating is
    raised carrying the witness cycle of states.
    """
    exp = beta_expansion(alpha, table, state_budget=state_budget)
    if exp.period:
        # reconstruct the cycle states for the witness
        cur = table.ring.element(alpha)
        for j in exp.preperiod:
            cur = table.strip(cur, j)
        cycle = []
        for j in exp.period:
            cycle.append(cur)
            cur = table.strip(cur, j)
        raise NotTerminating(
            f"expansion has nonzero period {list(exp.period)}", cycle=_lex_least_rotation(cycle)
        )
    return exp.preperiod


def omits_digit(exp, b):
    """True iff digit index b never appears in the (infinite) stream.

    The implicit zero tail counts as containing the zero digit, except for the
    zero element itself, whose empty expansion omits everything.
    """
    if not exp.preperiod and not exp.period:
        return True
    if b in exp.preperiod or b in exp.period:
        return False
    if not exp.period and b == exp.dset.zero_index():
        return False
    return True


def render_text(exp):
    """Most-significant-first rendering; the period is wrapped as (...)*."""
    sep = "," if any(len(d.coeffs) > 1 or d.coeffs[0] > 9 or d.coeffs[0] < 0 for d in exp.dset.digits) else ""

    def word(idxs):
        parts = []
        for j in idxs:
            c = exp.dset.digits[j].coeffs
            parts.append(str(c[0]) if len(c) == 1 else str(list(c)))
        return sep.join(reversed(parts))

    pre = word(exp.preperiod)
    if not exp.period:
        return pre if pre else "0"
    per = word(exp.period)
    return f"({per})*{pre}" if pre else f"({per})*"


# ---------------------------------------------------------------------------
# expansivity: every conjugate of beta has absolute value > 1
# ---------------------------------------------------------------------------

def _routh_strictly_stable(c):
    """All roots of the real polynomial c (little-endian) strictly in the left
    half-plane.  Exact over Fraction.  Any marginal structure (zero pivot, zero
    row, root at the origin) returns False: the test fails closed."""
    c = [x for x in c]
    while c and c[-1] == 0:
        c.pop()
    if len(c) <= 1:
        return len(c) == 1
    if c[0] == 0:
        return False
    if c[-1] < 0:
        c = [-x for x in c]
    n = len(c) - 1
    prev = [Fraction(c[n - 2 * i]) for i in range(n // 2 + 1)]
    cur = [Fraction(c[n - 1 - 2 * i]) for i in range((n - 1) // 2 + 1)]
    pivots = [prev[0]]
    while cur:
        p0 = cur[0]
        if p0 == 0:
            return False
        pivots.append(p0)
        ratio = prev[0] / p0
        nxt = []
        for i in range(len(prev) - 1):
            a = prev[i + 1]
            b = cur[i + 1] if i + 1 < len(cur) else Fraction(0)
            nxt.append(a - ratio * b)
        prev, cur = cur, nxt
    return all(p > 0 for p in pivots)


def all_roots_outside_unit_disk(h):
    """True iff every complex root of the integer polynomial h satisfies |z| > 1.

    Exact: the reversed polynomial must have all roots strictly inside the unit
    disk, which the Cayley transform w -> (1+w)/(1-w) turns into left-half-plane
    stability, decided by the Routh test.  Roots at z = +-1 are screened first;
    any root on the unit circle makes the Routh test fail closed.
    """
    h = [x for x in h]
    while h and h[-1] == 0:
        h.pop()
    d = len(h) - 1
    if d <= 0:
        return d == 0
    if h[0] == 0:
        return False
    rev = list(reversed(h))
    if sum(rev) == 0 or sum(x * (-1) ** k for k, x in enumerate(rev)) == 0:
        return False
    H = [0] * (d + 1)
    for k, co in enumerate(rev):
        if co == 0:
            continue
        a = [1]
        for _ in range(k):
            a = [x + y for x, y in zip(a + [0], [0] + a)]
        b = [1]
        for _ in range(d - k):
            b = [x - y for x, y in zip(b + [0], [0] + b)]
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                H[i + j] += co * x * y
    return _routh_strictly_stable(H)


def is_expansive(ring, beta):
    """All conjugates of beta exceed 1 in absolute value (exact, fails closed)."""
    return all_roots_outside_unit_disk(list(ring.char_poly(ring.element(beta))))


# ---------------------------------------------------------------------------
# canonical number system check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CnsVerdict:
    """Outcome of cns_check: is every element's expansion finite?"""

    is_cns: bool
    witness_cycle: tuple | None
    expansivity_ok: bool
    closure_size: int

    def to_dict(self):
        return {
            "is_cns": self.is_cns,
            "witness_cycle": None
            if self.witness_cycle is None
            else [list(e.coeffs) for e in self.witness_cycle],
            "expansivity_ok": self.expansivity_ok,
            "closure_size": self.closure_size,
        }


def _lex_least_rotation(cycle):
    if not cycle:
        return tuple(cycle)
    keys = [e.coeffs for e in cycle]
    best = min(range(len(cycle)), key=lambda r: keys[r:] + keys[:r])
    return tuple(cycle[best:] + cycle[:best])


def cns_check(ring, beta, closure_budget=200000, state_budget=10**6):
    """Decide whether (beta, {0..|N(beta)|-1}) gives every element a finite
    expansion.

    Soundness rests on a closure argument: grow E from {+-x^i} under
    e -> strip(e + a) over all digits a.  If every member of the closed E
    reaches 0 under plain stripping, then adding any digit (hence any element,
    as a sum of basis vectors) preserves finiteness, so the pair is a CNS.  A
    nonzero strip cycle inside E is a witness of failure.

    Expansivity of beta (all conjugates outside the unit circle) is reported
    separately; without it the closure may grow past the budget.
    """
    beta = ring.element(beta)
    dset = digit_set_canonical(ring, beta)  # NotRepresentative propagates
    table = ResidueTable(ring, beta, dset)
    expansivity_ok = is_expansive(ring, beta)

    start = []
    for i in range(ring.degree):
        e = [0] * ring.degree
        e[i] = 1
        start.append(ring.element(list(e)))
        start.append(ring.element([-x for x in e]))
    E = {e.coeffs: e for e in start}
    frontier = list(start)
    while frontier:
        new = []
        for e in frontier:
            for a in dset.digits:
                w = e + a
                t = table.strip(w, table.digit_index(w))
                if t.coeffs not in E:
                    E[t.coeffs] = t
                    new.append(t)
        frontier = new
        if len(E) > closure_budget:
            raise ClosureBudgetExceeded(
                f"closure exceeded {closure_budget} states"
                + ("" if expansivity_ok else " (base is not expansive)")
            )

    zero = ring.zero()
    reaches_zero = {zero.coeffs}
    for e in E.values():
        path = []
        seen_here = {}
        cur = e
        while cur.coeffs not in reaches_zero:
            if cur.coeffs in seen_here:
                # nonzero cycle: extract and normalize the witness
                i0 = seen_here[cur.coeffs]
                cycle = _lex_least_rotation(path[i0:])
                return CnsVerdict(False, cycle, expansivity_ok, len(E))
            seen_here[cur.coeffs] = len(path)
            path.append(cur)
            if len(path) > state_budget:
                raise StateBudgetExceeded("orbit exceeded the state budget")
            cur = table.strip(cur, table.digit_index(cur))
        reaches_zero.update(s.coeffs for s in path)
    return CnsVerdict(True, None, expansivity_ok, len(E))

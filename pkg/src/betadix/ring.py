"""Exact arithmetic in an order Z[x]/(f) for a monic integer polynomial f.

Elements are integer coordinate vectors on the power basis 1, x, ..., x^(d-1).
All arithmetic is exact (Python integers); norms come from the characteristic
polynomial of the multiplication operator, which for monic f equals the
resultant of f with the element polynomial.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, NotMonic, Reducible, RingMismatch

_TERM_RE = re.compile(r"^([+-]?\d*)(?:\*?([a-zA-Z])(?:\^(\d+))?)?$")


def poly_from_string(text):
    """Parse '-1+x', '2i', 'x^3-2x+5' into a little-endian coefficient list.

    Single-letter variable, integer coefficients, + and - only.  The variable
    letter is free (x, i, t, ...); mixing letters in one expression is an error.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element string")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse element string {text!r}")
    coeffs = {}
    var = None
    for t in terms:
        m = _TERM_RE.match(t)
        if not m:
            raise ValueError(f"cannot parse term {t!r} in {text!r}")
        cs, v, es = m.groups()
        if v is None and cs in ("", "+", "-"):
            raise ValueError(f"cannot parse term {t!r} in {text!r}")
        if v is not None:
            if var is None:
                var = v
            elif v != var:
                raise ValueError(f"mixed variables {var!r} and {v!r} in {text!r}")
        c = 1 if cs in ("", "+") else -1 if cs == "-" else int(cs)
        e = 0 if v is None else 1 if es is None else int(es)
        coeffs[e] = coeffs.get(e, 0) + c
    deg = max(coeffs)
    return [coeffs.get(k, 0) for k in range(deg + 1)]


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


class NumberRing:
    """Z[x]/(f), f monic of degree >= 1 with integer coefficients.

    Irreducibility of f is either verified at construction (check_irreducible=True,
    exact, via sympy) or trusted; ``irreducibility`` records which.  With a
    reducible trusted f the ring is a general quotient and division guarantees
    become conditional.
    """

    def __init__(self, f, check_irreducible=False):
        f = _trim(f)
        if len(f) < 2:
            raise NotMonic("defining polynomial must have degree >= 1")
        if f[-1] != 1:
            raise NotMonic(f"defining polynomial must be monic, got leading {f[-1]}")
        if any(not isinstance(c, int) for c in f):
            raise NotMonic("defining polynomial must have integer coefficients")
        self.f = tuple(f)
        self.degree = len(f) - 1
        if check_irreducible:
            if not self._sympy_irreducible():
                raise Reducible(f"{self.f} is reducible over Q")
            self.irreducibility = "verified"
        else:
            self.irreducibility = "trusted"
        # x^k reduced mod f, for k up to 2d-2 (enough for products of basis vectors)
        d = self.degree
        rows = [[0] * d for _ in range(2 * d - 1)]
        for k in range(d):
            rows[k][k] = 1
        for k in range(d, 2 * d - 1):
            prev = rows[k - 1]
            shifted = [0] + list(prev)
            lead = shifted[d] if len(shifted) > d else 0
            rows[k] = [shifted[i] - lead * self.f[i] for i in range(d)]
        self._xpow = rows

    def _sympy_irreducible(self):
        import sympy

        x = sympy.Symbol("x")
        return sympy.Poly(list(reversed(self.f)), x).is_irreducible

    # -- element construction -------------------------------------------------
    def element(self, coeffs):
        """Build an element from an int or a little-endian coefficient sequence.

        Sequences longer than the degree are reduced mod f, so arbitrary
        polynomial expressions are accepted.
        """
        if isinstance(coeffs, AlgebraicInt):
            if coeffs.ring is not self and coeffs.ring != self:
                raise RingMismatch("element belongs to a different ring")
            return coeffs
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        coeffs = list(coeffs)
        if any(not isinstance(c, int) for c in coeffs):
            raise ValueError("coefficients must be integers")
        d = self.degree
        if len(coeffs) > d:
            acc = [0] * d
            for k, c in enumerate(coeffs):
                if c == 0:
                    continue
                row = self._power_row(k)
                for i in range(d):
                    acc[i] += c * row[i]
            coeffs = acc
        else:
            coeffs = coeffs + [0] * (d - len(coeffs))
        return AlgebraicInt(self, tuple(coeffs))

    def _power_row(self, k):
        # x^k mod f as a length-d vector, extending the cache on demand
        d = self.degree
        while k >= len(self._xpow):
            prev = self._xpow[-1]
            shifted = [0] + list(prev)
            lead = shifted[d] if len(shifted) > d else 0
            self._xpow.append([shifted[i] - lead * self.f[i] for i in range(d)])
        return self._xpow[k]

    def parse(self, text):
        return self.element(poly_from_string(text))

    def zero(self):
        return AlgebraicInt(self, (0,) * self.degree)

    def one(self):
        return self.element(1)

    def generator(self):
        """The class of x."""
        return self.element([0, 1])

    # -- linear algebra over the power basis ----------------------------------
    def mul_matrix(self, a):
        """Multiplication-by-a matrix M (column j = a * x^j reduced mod f)."""
        a = self.element(a)
        d = self.degree
        cols = []
        for j in range(d):
            acc = [0] * d
            for i, ci in enumerate(a.coeffs):
                if ci == 0:
                    continue
                row = self._power_row(i + j)
                for t in range(d):
                    acc[t] += ci * row[t]
            cols.append(acc)
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def char_poly(self, a):
        """Characteristic polynomial of multiplication by a (monic, little-endian).

        Faddeev-LeVerrier; the divisions by k are exact over Z.
        """
        M = self.mul_matrix(a)
        d = self.degree
        c = [0] * (d + 1)
        c[d] = 1
        A = [[0] * d for _ in range(d)]
        for k in range(1, d + 1):
            B = [
                [A[i][j] + (c[d - k + 1] if i == j else 0) for j in range(d)]
                for i in range(d)
            ]
            A = [
                [sum(M[i][t] * B[t][j] for t in range(d)) for j in range(d)]
                for i in range(d)
            ]
            tr = sum(A[i][i] for i in range(d))
            c[d - k] = -tr // k
        return tuple(c)

    def norm(self, a):
        """Field norm of a down to Z: the determinant of multiplication by a,
        equal to the resultant Res(f, a(x)) for monic f."""
        c = self.char_poly(a)
        return (-1) ** self.degree * c[0]

    # -- identity --------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, NumberRing) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"NumberRing({list(self.f)})"

    def to_dict(self):
        return {"f": list(self.f)}

    @classmethod
    def from_dict(cls, data, check_irreducible=False):
        return cls(data["f"], check_irreducible=check_irreducible)


class AlgebraicInt:
    """Element of a NumberRing: an immutable integer coordinate vector."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicInt is immutable")

    def _coerce(self, other):
        if isinstance(other, AlgebraicInt):
            if other.ring != self.ring:
                raise RingMismatch("elements belong to different rings")
            return other
        if isinstance(other, int):
            return self.ring.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return AlgebraicInt(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        d = ring.degree
        acc = [0] * d
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b == 0:
                    continue
                row = ring._power_row(i + j)
                ab = a * b
                for t in range(d):
                    acc[t] += ab * row[t]
        return AlgebraicInt(ring, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.element(other)
        return (
            isinstance(other, AlgebraicInt)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring.f, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def norm(self):
        return self.ring.norm(self)

    def evaluate_mod(self, x, mod):
        """Value of the coordinate polynomial at the integer x, modulo mod."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % mod
        return acc

    def __repr__(self):
        return f"AlgebraicInt({list(self.coeffs)})"

    def to_dict(self):
        return {"coeffs": list(self.coeffs)}


def divide_exact(a, b):
    """The exact quotient a/b in the ring, or None when b does not divide a.

    Solves M_b q = a over the rationals and accepts only an integer solution.
    Raises DivisionByZero when b = 0 or b is a zero divisor (norm 0).
    """
    ring = a.ring
    b = ring.element(b)
    if a.ring != b.ring:
        raise RingMismatch("elements belong to different rings")
    if not b:
        raise DivisionByZero("division by zero element")
    d = ring.degree
    M = ring.mul_matrix(b)
    A = [[Fraction(M[i][j]) for j in range(d)] + [Fraction(a.coeffs[i])] for i in range(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if A[r][col] != 0), None)
        if piv is None:
            raise DivisionByZero("divisor has norm 0 (zero divisor in a reducible quotient)")
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for r in range(d):
            if r != col and A[r][col] != 0:
                fct = A[r][col]
                A[r] = [x - fct * y for x, y in zip(A[r], A[col])]
    sol = [A[r][d] for r in range(d)]
    if any(s.denominator != 1 for s in sol):
        return None
    return AlgebraicInt(ring, tuple(int(s) for s in sol))


def divides(b, a):
    """True iff b divides a exactly."""
    return divide_exact(a, b) is not None

"""Digit sets and residue lookup modulo a base element beta.

A digit set for beta must contain exactly one representative of each class of
Z[x]/(f) modulo the lattice beta*Z[x]/(f); there are |N(beta)| classes.  Residue
identification goes through the column Hermite normal form of the
multiplication-by-beta matrix, which canonicalizes coordinate vectors modulo
the lattice its columns span.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NormTooSmall, NotRepresentative, RingMismatch
from .ring import AlgebraicInt, divide_exact


@dataclass(frozen=True)
class DigitSet:
    """An ordered digit list for some beta; digits are addressed by index."""

    ring: object
    digits: tuple
    canonical: bool = False

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    def zero_index(self):
        """Index of the digit equal to 0, or None."""
        for j, d in enumerate(self.digits):
            if not d:
                return j
        return None

    def to_dict(self):
        if self.canonical:
            return {"canonical": len(self.digits)}
        return {"digits": [list(d.coeffs) for d in self.digits]}


def _hnf_columns(B):
    """Column HNF of a nonsingular integer matrix: lower triangular, positive
    diagonal, entries left of the diagonal reduced into [0, diagonal)."""
    d = len(B)
    cols = [[B[i][j] for i in range(d)] for j in range(d)]
    for i in range(d):
        while True:
            nz = [j for j in range(i, d) if cols[j][i] != 0]
            if not nz:
                raise DivisionByZero("beta has norm 0: multiplication lattice is singular")
            jmin = min(nz, key=lambda j: abs(cols[j][i]))
            if cols[jmin][i] < 0:
                cols[jmin] = [-x for x in cols[jmin]]
            cols[i], cols[jmin] = cols[jmin], cols[i]
            done = True
            for j in range(i + 1, d):
                if cols[j][i] != 0:
                    q = cols[j][i] // cols[i][i]
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[i])]
                    if cols[j][i] != 0:
                        done = False
            if done:
                break
        for j in range(i):
            q = cols[j][i] // cols[i][i]
            cols[j] = [x - q * y for x, y in zip(cols[j], cols[i])]
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _adjugate(M):
    """det(M) and adj(M) with adj(M) @ v = det * M^-1 @ v, both exact."""
    d = len(M)
    A = [[Fraction(M[i][j]) for j in range(d)] for i in range(d)]
    inv = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    det = Fraction(1)
    for col in range(d):
        piv = next((r for r in range(col, d) if A[r][col] != 0), None)
        if piv is None:
            raise DivisionByZero("singular multiplication matrix")
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            det = -det
        pv = A[col][col]
        det *= pv
        A[col] = [x / pv for x in A[col]]
        inv[col] = [x / pv for x in inv[col]]
        for r in range(d):
            if r != col and A[r][col] != 0:
                fct = A[r][col]
                A[r] = [x - fct * y for x, y in zip(A[r], A[col])]
                inv[r] = [x - fct * y for x, y in zip(inv[r], inv[col])]
    deti = int(det)
    adj = [[int(inv[i][j] * det) for j in range(d)] for i in range(d)]
    return deti, adj


class ResidueTable:
    """Canonical residues mod beta plus a digit lookup.

    ``hnf`` is the column Hermite normal form of the multiplication-by-beta
    matrix; canonical vectors satisfy 0 <= v[i] < hnf[i][i], and the diagonal
    product equals |N(beta)|.
    """

    def __init__(self, ring, beta, dset):
        beta = ring.element(beta)
        if dset.ring != ring:
            raise RingMismatch("digit set belongs to a different ring")
        self.ring = ring
        self.beta = beta
        self.mul = ring.mul_matrix(beta)
        self.hnf = _hnf_columns(self.mul)
        self.size = 1
        for i in range(ring.degree):
            self.size *= self.hnf[i][i]
        nb = abs(ring.norm(beta))
        if nb < 2:
            raise NormTooSmall(f"|N(beta)| = {nb}, need >= 2")
        assert self.size == nb  # det of the HNF is the lattice index
        if len(dset.digits) != self.size:
            raise NotRepresentative(
                f"digit set has {len(dset.digits)} elements, |N(beta)| = {self.size}"
            )
        self.dset = dset
        self.lookup = {}
        for j, dig in enumerate(dset.digits):
            key = self.residue_key(dig)
            if key in self.lookup:
                raise NotRepresentative(
                    f"digits {j} and {self.lookup[key]} are congruent mod beta"
                )
            self.lookup[key] = j
        self._det, self._adj = _adjugate(self.mul)

    def residue_key(self, alpha):
        """Canonical representative of alpha's class, as a coordinate tuple."""
        v = list(alpha.coeffs)
        d = len(v)
        H = self.hnf
        for i in range(d):
            q = v[i] // H[i][i]
            if q:
                for t in range(i, d):
                    v[t] -= q * H[t][i]
        return tuple(v)

    def digit_index(self, alpha):
        return self.lookup[self.residue_key(alpha)]

    def strip(self, alpha, j):
        """(alpha - digits[j]) / beta, exact by construction."""
        w = [a - b for a, b in zip(alpha.coeffs, self.dset.digits[j].coeffs)]
        d = len(w)
        out = []
        for i in range(d):
            s = sum(self._adj[i][t] * w[t] for t in range(d))
            if s % self._det:
                raise ArithmeticError("digit strip was not exact; digit table is corrupt")
            out.append(s // self._det)
        return AlgebraicInt(self.ring, tuple(out))


def digit_set_canonical(ring, beta):
    """The digit set {0, 1, ..., |N(beta)|-1} as rational integers.

    Raises NotRepresentative when these do not represent every class mod beta
    (then no expansion with these digits exists for some elements).
    """
    beta = ring.element(beta)
    m = abs(ring.norm(beta))
    if m < 2:
        raise NormTooSmall(f"|N(beta)| = {m}, need >= 2")
    dset = DigitSet(ring, tuple(ring.element(k) for k in range(m)), canonical=True)
    ResidueTable(ring, beta, dset)  # validates representativeness
    return dset


def digit_set(ring, beta, elements):
    """A caller-supplied digit set, validated against beta."""
    dset = DigitSet(ring, tuple(ring.element(e) for e in elements), canonical=False)
    ResidueTable(ring, beta, dset)
    return dset


def is_representative_system(ring, beta, elements):
    """True iff the elements hit every residue class mod beta exactly once:
    the size is |N(beta)| and no pairwise difference is divisible by beta."""
    beta = ring.element(beta)
    elems = [ring.element(e) for e in elements]
    if len(elems) != abs(ring.norm(beta)):
        return False
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if divide_exact(elems[i] - elems[j], beta) is not None:
                return False
    return True


def residue_reducer(ring, modulus):
    """Canonicalization map onto Z[theta]/(modulus), as a reusable closure.

    Elements mapping to equal tuples are congruent mod modulus and conversely.
    The number of distinct tuples is |N(modulus)|.
    """
    modulus = ring.element(modulus)
    H = _hnf_columns(ring.mul_matrix(modulus))
    d = ring.degree

    def reduce(alpha):
        v = list(ring.element(alpha).coeffs)
        for i in range(d):
            q = v[i] // H[i][i]
            if q:
                for t in range(i, d):
                    v[t] -= q * H[t][i]
        return tuple(v)

    return reduce


def residue_digit(table, alpha):
    """Index of the unique digit congruent to alpha mod beta."""
    return table.digit_index(table.ring.element(alpha))


def truncation_map(prefix, dset, beta):
    """Sum of digits[prefix[j]] * beta^j: the element value of a digit prefix."""
    ring = dset.ring
    beta = ring.element(beta)
    acc = ring.zero()
    for j in reversed(list(prefix)):
        acc = acc * beta + dset.digits[j]
    return acc

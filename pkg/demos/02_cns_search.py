"""Which bases give every element a finite expansion?

A base beta with canonical digits {0, ..., |N(beta)|-1} is a canonical number
system (CNS) when the digit-strip orbit of every element reaches 0.  The
check closes a finite set of generators under the strip map and inspects the
orbits: a nonzero cycle is a certificate of failure, and closure plus
all-orbits-to-zero is a proof of success.

Run: python demos/02_cns_search.py
"""

from betadix import (
    NormTooSmall,
    NotRepresentative,
    NumberRing,
    cns_check,
    is_expansive,
)


def verdict_line(ring, beta, name):
    try:
        v = cns_check(ring, beta)
    except NotRepresentative:
        return f"{name:>8}  canonical digits are not a residue system"
    except NormTooSmall:
        return f"{name:>8}  |N(beta)| < 2, no digit set"
    tail = ""
    if v.witness_cycle:
        tail = "  cycle " + " -> ".join(str(list(e.coeffs)) for e in v.witness_cycle)
    return (
        f"{name:>8}  cns={str(v.is_cns).lower():5}  "
        f"expansive={str(v.expansivity_ok).lower():5}  "
        f"closure={v.closure_size:3}{tail}"
    )


def main():
    Z = NumberRing((0, 1))
    print("== rational integers ==")
    for b in (-5, -4, -3, -2, 2, 3, 10):
        print(verdict_line(Z, Z.element(b), str(b)))
    print("(positive bases fail on the negatives: -1 strips to itself)")

    print()
    print("== Gaussian integers ==")
    G = NumberRing((1, 0, 1))
    for text in ("-1+i", "-1-i", "1+i", "-2", "2+i", "-2+i", "2"):
        print(verdict_line(G, G.parse(text), text))
    print("(1+i is expansive yet fails: the orbit of i is a fixed point;")
    print(" its conjugate -1+i works, the classic twin-dragon base)")

    print()
    print("== a cubic ring, Z[x]/(x^3 - x + 2) ==")
    C = NumberRing((2, -1, 0, 1))
    theta = C.generator()
    print(verdict_line(C, theta, "theta"))
    print(verdict_line(C, -theta, "-theta"))

    print()
    print("== expansivity alone is decidable exactly, without floats ==")
    bumpy = NumberRing((2, -5, 1))  # roots 0.438... and 4.561...
    print("x^2-5x+2, theta expansive?", is_expansive(bumpy, bumpy.generator()))


if __name__ == "__main__":
    main()

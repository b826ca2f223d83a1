"""Digit products, persistence, and practical numbers.

Two smaller digit games. First: iterate " multiply all the digits" until one
digit remains; the number of steps is the persistence. Second: call n
practical when every m < n is a sum of distinct divisors of n, and watch the
central binomial coefficients C(2n, n) fail to be practical at the
power-of-two exponents whose ternary digits avoid 2.

Run: python demos/05_persistence_and_practical.py
"""

from math import comb

from betadix import (
    central_binomial_factors,
    central_binomial_practical,
    is_practical,
    persistence,
    qualifies_central_binomial,
)


def main():
    print("== persistence in base 10 ==")
    for n in (39, 77, 679, 6788, 68889, 277777788888899):
        rec = persistence(n)
        chain = " -> ".join(str(v) for v in rec.orbit)
        print(f"   {n}: {rec.l} steps   {chain}")

    print()
    print("== record holders: smallest n with each persistence ==")
    found = {}
    n = 0
    while len(found) < 8 and n < 10**7:
        n += 1
        l = persistence(n).l
        if l not in found:
            found[l] = n
    for l in sorted(found):
        print(f"   persistence {l}: first reached at n = {found[l]}")

    print()
    print("== practical numbers up to 50 ==")
    print("  ", [n for n in range(1, 51) if is_practical(n)])

    print()
    print("== central binomials at qualifying exponents ==")
    print("   qualifying: powers of 2 whose ternary expansion omits digit 2")
    for j in range(10):
        n = 2**j
        if qualifies_central_binomial(n):
            rec = central_binomial_practical(n)
            note = f"   note: {rec.note}" if rec.note else ""
            print(f"   n = {n:>3}: C({2*n}, {n}) = {rec.binomial} "
                  f"practical={rec.practical}{note}")

    print()
    print("== C(2n, n) factored without ever factoring the value ==")
    n = 30
    factors = central_binomial_factors(n)
    text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors)
    print(f"   C(60, 30) = {comb(60, 30)} = {text}")


if __name__ == "__main__":
    main()

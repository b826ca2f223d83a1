"""Digit expansions in ordinary, negative, and complex bases.

Every element of a ring Z[theta] gets a unique eventually periodic digit
stream over a base beta and a set of digit representatives: strip the digit
congruent to the element mod beta, divide the difference by beta, repeat.
Finite streams are classical radix expansions; periodic tails appear exactly
when the orbit of the strip map enters a nonzero cycle.

Run: python demos/01_beta_expansions.py
"""

from betadix import (
    NumberRing,
    ResidueTable,
    beta_expansion,
    digit_set,
    digit_set_canonical,
    render_text,
    truncation_map,
)


def show(ring, beta, value, dset=None, label=""):
    beta = ring.element(beta)
    dset = dset or digit_set_canonical(ring, beta)
    table = ResidueTable(ring, beta, dset)
    value = ring.parse(value) if isinstance(value, str) else ring.element(value)
    exp = beta_expansion(value, table)
    print(f"{label or value!r:>12}  ->  {render_text(exp)}")
    return exp


def main():
    Z = NumberRing((0, 1))

    print("== base 10, the familiar case ==")
    show(Z, 10, 2024, label="2024")

    print()
    print("== base -2: negative bases reach every integer without a sign ==")
    for n in (7, -7, 12):
        show(Z, -2, n, label=str(n))

    print()
    print("== base 2 over digits {0, 3}: 1 picks up an infinite periodic tail ==")
    dset = digit_set(Z, Z.element(2), [Z.element(0), Z.element(3)])
    exp = show(Z, 2, 1, dset=dset, label="1")
    print("   digit stream, least significant first:",
          [dset[j].coeffs[0] for j in exp.prefix(10)])
    # partial sums approach 1 in the 2-adic metric: 3, 3, 15, 15, 63, ...
    for k in (1, 3, 5, 7):
        part = truncation_map(exp.prefix(k), dset, Z.element(2))
        gap = 1 - part.coeffs[0]
        print(f"   after {k} digits: partial sum {part.coeffs[0]:>4}, "
              f"1 - partial divisible by 2^{k} ({gap})")

    print()
    print("== Gaussian integers, base -1+i ==")
    G = NumberRing((1, 0, 1))
    for v in ("3+2i", "i", "-5"):
        show(G, G.parse("-1+i"), v, label=v)


if __name__ == "__main__":
    main()

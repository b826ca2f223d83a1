"""How often do the ternary digits of 2^n miss a digit?

Writing 2^n in base 3 and asking that some fixed digit never appear is an
extremely rigid condition: the count M(N) of such exponents n <= N appears to
stay bounded, and provably grows slower than any power N^s with
s > sigma = log 2 / log 3.  This demo measures the counts, the ratio
M(N')/N'^sigma at power-of-3 checkpoints, and the exponent-gap law that
drives the bound.

Run: python demos/04_digit_omission_bounds.py
"""

from betadix import (
    CountRequest,
    NumberRing,
    count_omitting,
    digit_set_canonical,
    narkiewicz_check,
    verify_gap_lemma,
)


def main():
    Z = NumberRing((0, 1))
    dset = digit_set_canonical(Z, Z.element(3))

    print("== exponents n <= 10^4 with no ternary digit 2 in 2^n ==")
    req = CountRequest(Z, 2, 3, dset, 2, 10**4)
    rep = count_omitting(req)
    print(f"   hits: {list(rep.hits)}   (2^2 = 11_3, 2^8 = 100111_3)")
    print(f"   sigma = log 2 / log 3 = {rep.sigma.text[:20]}...")
    print("   checkpoint table (N', M, ratio M/N'^sigma):")
    for (n, m), r in zip(rep.counts, rep.ratios):
        print(f"   {n:>6} {m:>3}  {r[:16]}")

    print()
    print("== the same machinery on every digit ==")
    for b in (0, 1):
        r = count_omitting(CountRequest(Z, 2, 3, dset, b, 3**9))
        print(f"   omit digit {b}: hits {list(r.hits)}")

    print()
    print("== ratio never climbs past 1.62 (checked at every hit) ==")
    nark = narkiewicz_check(10**4)
    print(f"   max ratio {nark.max_ratio[:22]}... at N' = {nark.argmax}, "
          f"ok = {nark.ok}")

    print()
    print("== the gap law behind the bound ==")
    print("   if 2^(l+6n) and 2^(l+6m) share their first k ternary digits,")
    print("   then 3^(k-2) divides n - m; so a window of 3^k consecutive n")
    print("   holds at most 9 exponents per digit word:")
    for k in (1, 2, 3, 4):
        g = verify_gap_lemma(Z.element(2), 3, k=k, nmax=150)
        print(f"   k={k}: gap modulus {g.gap_modulus:>2}, window {g.window:>3}, "
              f"largest class {g.max_class_size} <= {g.c0_tilde}, "
              f"violations {g.violations}")


if __name__ == "__main__":
    main()

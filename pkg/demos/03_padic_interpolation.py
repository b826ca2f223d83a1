"""Interpolating the power sequence n -> alpha^n q-adically.

Fix alpha = 2 and the prime 3.  The subsequence n -> 2^(l + 6n) extends to an
analytic function G_l(x) = 2^l * exp(x * log 2^6) on the 3-adic integers,
because u = 6 is the least exponent with 2^6 = 1 mod 9, which places 2^6
inside the domain of the 3-adic logarithm.  Truncated log and exp series with
exact tail bounds make the interpolation exact mod 3^K.

Run: python demos/03_padic_interpolation.py
"""

from betadix import (
    NumberRing,
    PadicInt,
    interpolate_G,
    lipschitz_constants,
    padic_exp,
    padic_log,
    primes_above,
    qval,
    unit_order_u,
)


def main():
    Z = NumberRing((0, 1))
    model = primes_above(Z, Z.element(3), K=20)[0]
    alpha = Z.element(2)

    u = unit_order_u(alpha, model)
    print(f"unit order: least u with 2^u = 1 mod 9 is u = {u}")

    m0, n0 = lipschitz_constants(alpha, u, [model])
    print(f"difference law: v3(2^(6n) - 2^(6m)) = v3(n - m) + {n0}")
    print("   check a few pairs:")
    for n, m in ((2, 1), (4, 1), (10, 1), (28, 1)):
        lhs = qval(2 ** (6 * n) - 2 ** (6 * m), 3)
        rhs = qval(n - m, 3) + n0
        print(f"   n={n:2} m={m}: v3(2^{6*n} - 2^{6*m}) = {lhs}, "
              f"v3({n - m}) + {n0} = {rhs}")

    print()
    print("interpolation agrees with plain powers on the integers:")
    mod = 3**20
    for l in (0, 1, 5):
        for n in (0, 1, 7, 50):
            g = interpolate_G(alpha, l, u, n, model)
            direct = pow(2, l + 6 * n, mod)
            mark = "ok" if g.value == direct else "MISMATCH"
            print(f"   G_{l}({n:2}) mod 3^20 = {g.value:>12}  [{mark}]")

    print()
    print("but G_l also takes arguments no power tower can reach:")
    x = PadicInt(3, 20, (3**20 - 1) // 2)      # x = -1/2 in Z_3
    g = interpolate_G(alpha, 0, u, x, model)
    print(f"   G_0(-1/2) mod 3^20 = {g.value}")
    # G_0(-1/2) is a square root of 2^-6, so g^2 * 2^6 = 1 mod 3^20
    print(f"   g^2 * 2^6 mod 3^20 = {(g * g * 2**6).value} (a 3-adic "
          "square root of 2^-6)")

    print()
    print("log and exp are exact inverses on their shared domain:")
    z = PadicInt(3, 20, 1 + 9 * 12345)
    roundtrip = padic_exp(padic_log(z))
    print(f"   exp(log({z.value})) = {roundtrip.value}")


if __name__ == "__main__":
    main()

"""Arithmetic in Z[x]/(f): elements, norms, exact division."""

import random

import pytest

from betadix import (
    DivisionByZero,
    NotMonic,
    NumberRing,
    divide_exact,
    divides,
    poly_from_string,
)


Z = NumberRing((0, 1))
GAUSS = NumberRing((1, 0, 1))          # Z[i]
CUBIC = NumberRing((2, -1, 0, 1))      # x^3 - x + 2


def test_poly_from_string_forms():
    assert poly_from_string("x") == [0, 1]
    assert poly_from_string("x^2+1") == [1, 0, 1]
    assert poly_from_string("x^3 - x + 2") == [2, -1, 0, 1]
    assert poly_from_string("x^2 - 2*x + 7") == [7, -2, 1]


def test_poly_from_string_rejects_nonmonic():
    with pytest.raises(NotMonic):
        NumberRing(poly_from_string("2x^2+1"))


def test_element_reduces_high_powers():
    # i^2 = -1 in Z[i]
    i = GAUSS.generator()
    assert (i * i).coeffs == (-1, 0)
    assert (i ** 4).coeffs == (1, 0)


def test_parse_gaussian_shorthand():
    assert GAUSS.parse("3+2i").coeffs == (3, 2)
    assert GAUSS.parse("-1+i").coeffs == (-1, 1)
    assert GAUSS.parse("i").coeffs == (0, 1)
    assert GAUSS.parse("7").coeffs == (7, 0)


def test_ring_equality_and_hash():
    assert Z == NumberRing((0, 1))
    assert Z != GAUSS
    assert len({Z, NumberRing((0, 1)), GAUSS}) == 2


def test_norm_degree_one_is_identity():
    for n in (-9, -1, 0, 1, 14):
        assert Z.element(n).norm() == n


def test_norm_gaussian_matches_a2_plus_b2():
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        assert GAUSS.element((a, b)).norm() == a * a + b * b


def test_norm_is_multiplicative():
    rng = random.Random(12)
    for ring in (GAUSS, CUBIC):
        d = ring.degree
        for _ in range(150):
            a = ring.element([rng.randint(-9, 9) for _ in range(d)])
            b = ring.element([rng.randint(-9, 9) for _ in range(d)])
            assert (a * b).norm() == a.norm() * b.norm()


def test_char_poly_annihilates_element():
    rng = random.Random(13)
    for ring in (Z, GAUSS, CUBIC):
        d = ring.degree
        for _ in range(40):
            a = ring.element([rng.randint(-6, 6) for _ in range(d)])
            c = ring.char_poly(a)
            acc = ring.zero()
            power = ring.one()
            for coeff in c:
                acc = acc + power * coeff
                power = power * a
            assert acc == ring.zero()


def test_divide_exact_gaussian():
    # (-1+i) * (-1+i) = -2i, so -2i / (-1+i) = -1+i
    q = divide_exact(GAUSS.parse("-2i"), GAUSS.parse("-1+i"))
    assert q.coeffs == (-1, 1)
    assert q * GAUSS.parse("-1+i") == GAUSS.parse("-2i")


def test_divide_exact_random_products():
    rng = random.Random(14)
    for ring in (Z, GAUSS, CUBIC):
        d = ring.degree
        for _ in range(120):
            a = ring.element([rng.randint(-8, 8) for _ in range(d)])
            b = ring.element([rng.randint(-8, 8) for _ in range(d)])
            if not b:
                continue
            assert divide_exact(a * b, b) == a


def test_divide_exact_rejects_nondivisor():
    assert divide_exact(GAUSS.parse("1"), GAUSS.parse("1+i")) is None


def test_divide_by_zero():
    with pytest.raises(DivisionByZero):
        divide_exact(Z.element(4), Z.zero())


def test_divides_predicate():
    assert divides(GAUSS.parse("1+i"), GAUSS.parse("2"))
    assert not divides(GAUSS.parse("1+2i"), GAUSS.parse("2"))
    assert divides(Z.element(3), Z.element(-9))


def test_coercion_from_int():
    a = GAUSS.parse("1+i")
    assert a + 1 == GAUSS.parse("2+i")
    assert 2 - a == GAUSS.parse("1-i")
    assert a * 3 == GAUSS.parse("3+3i")


def test_to_dict_round_trip():
    data = CUBIC.to_dict()
    again = NumberRing.from_dict(data)
    assert again == CUBIC
    el = CUBIC.element((1, 2, 3))
    assert el.to_dict() == {"coeffs": [1, 2, 3]}


def test_irreducibility_check_accepts_and_rejects():
    ring = NumberRing((1, 0, 1), check_irreducible=True)
    assert ring.irreducibility == "verified"
    assert NumberRing((1, 0, 1)).irreducibility == "trusted"
    from betadix import Reducible

    with pytest.raises(Reducible):
        NumberRing((0, 0, 1), check_irreducible=True)  # x^2


def test_evaluate_mod():
    # 3+2i at x=7 mod 25: 3 + 2*7 = 17
    assert GAUSS.parse("3+2i").evaluate_mod(7, 25) == 17

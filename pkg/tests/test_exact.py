"""Exact arithmetic: hand-checked values first, then random-trial invariants."""

import random
from fractions import Fraction

import pytest

from belyi import (
    INFINITY,
    Poly,
    ProjectivePoint,
    RatFunc,
    format_rational,
    parse_rational,
    poly_gcd,
    squarefree_decomposition,
)
from helpers import random_poly

X = Poly.x()


def test_normalization_strips_trailing_zeros():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)).is_zero
    assert Poly().degree == -1
    assert Poly((0, 0, 5)).degree == 2


def test_product_matches_expanded_form():
    # x^3 * (6x^2 - 15x + 10) = 6x^5 - 15x^4 + 10x^3
    assert Poly((0, 0, 0, 1)) * Poly((10, -15, 6)) == Poly((0, 0, 0, 10, -15, 6))


def test_difference_of_squares_division():
    q, r = divmod(X * X - 1, X - 1)
    assert q == X + 1
    assert r.is_zero


def test_division_with_remainder():
    p = Poly((1, 0, 0, 1))  # x^3 + 1
    q, r = divmod(p, Poly((1, 1)))  # by x + 1
    assert q * Poly((1, 1)) + r == p
    assert r.is_zero
    q, r = divmod(p, Poly((1, 0, 1)))  # by x^2 + 1
    assert q == X
    assert r == Poly((1, -1))


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Poly())


def test_derivative_on_family_polynomial():
    f = Poly((0, 0, 0, 10, -15, 6))
    df = f.derivative()
    assert df == Poly((0, 0, 30, -60, 30))
    # factored form: 30 x^2 (x - 1)^2
    assert df == 30 * (X ** 2) * ((X - 1) ** 2)


def test_derivative_rules_random():
    rng = random.Random(101)
    for _ in range(100):
        a, b = random_poly(rng), random_poly(rng)
        assert (a + b).derivative() == a.derivative() + b.derivative()
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_gcd_examples():
    assert poly_gcd(X ** 3, X ** 2) == X ** 2
    assert poly_gcd(X * X - 1, (X - 1) ** 2) == X - 1
    f = Poly((0, 0, 30, -60, 30))
    assert poly_gcd(f, f.derivative()) == X * X - X
    assert poly_gcd(Poly((7,)), X + 1) == Poly.one()
    assert poly_gcd(Poly(), X + 1) == X + 1


def test_gcd_of_two_zeros_rejected():
    with pytest.raises(ValueError):
        poly_gcd(Poly(), Poly())


def test_gcd_scaling_invariance_random():
    rng = random.Random(102)
    for _ in range(60):
        a, b, g = random_poly(rng, 4), random_poly(rng, 4), random_poly(rng, 3)
        if a.is_zero or b.is_zero or g.is_zero:
            continue
        lhs = poly_gcd(a * g, b * g)
        # the common factor g must divide the gcd
        assert (lhs % g.monic()).is_zero


def test_squarefree_decomposition_basic():
    p = (X ** 2) * ((X - 1) ** 2)
    assert squarefree_decomposition(p) == [(X * X - X, 2)]


def test_squarefree_decomposition_family_fiber():
    # 6x^5 - 15x^4 + 10x^3 - 1 = 6 (x - 1)^3 (x^2 + x/2 + 1/6)
    p = Poly((-1, 0, 0, 10, -15, 6))
    dec = squarefree_decomposition(p)
    assert dec == [
        (Poly((Fraction(1, 6), Fraction(1, 2), 1)), 1),
        (X - 1, 3),
    ]
    # independent cross-check: (x-1)^3 divides p exactly
    assert (p % (X - 1) ** 3).is_zero


def test_squarefree_input_is_its_own_decomposition():
    p = Poly((2, 0, 2))  # 2(x^2 + 1)
    assert squarefree_decomposition(p) == [(Poly((1, 0, 1)), 1)]
    assert squarefree_decomposition(Poly((5,))) == []


def test_squarefree_reconstruction_random():
    rng = random.Random(103)
    trials = 0
    while trials < 200:
        p = random_poly(rng, 7)
        if p.degree < 1:
            continue
        trials += 1
        dec = squarefree_decomposition(p)
        prod = Poly.constant(p.lc)
        mults = []
        for f, m in dec:
            prod = prod * f ** m
            mults.append(m)
            assert f.lc == 1
            assert poly_gcd(f, f.derivative()).degree == 0  # squarefree
        assert prod == p
        assert mults == sorted(set(mults))  # strictly increasing
        for i in range(len(dec)):
            for j in range(i + 1, len(dec)):
                assert poly_gcd(dec[i][0], dec[j][0]).degree == 0


def test_ratfunc_reduces_and_normalizes():
    f = RatFunc(Poly((0, 2)), Poly((0, 0, 4)))  # 2x / 4x^2
    assert f.num == Poly((Fraction(1, 2),))
    assert f.den == X
    assert f.den.lc == 1
    g = RatFunc(Poly((0, 0, 0, 1)))
    assert g.den == Poly.one()
    assert g.degree == 3


def test_ratfunc_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(X, Poly())


def test_ratfunc_arithmetic_random_stays_reduced():
    rng = random.Random(104)
    for _ in range(60):
        n1, d1 = random_poly(rng, 4), random_poly(rng, 4)
        n2, d2 = random_poly(rng, 4), random_poly(rng, 4)
        if d1.is_zero or d2.is_zero:
            continue
        a, b = RatFunc(n1, d1), RatFunc(n2, d2)
        for f in (a + b, a - b, a * b):
            assert f.den.lc == 1
            if not f.num.is_zero:
                assert poly_gcd(f.num, f.den).degree == 0


def test_evaluate_finite_points():
    f = RatFunc(Poly((0, 0, 0, 10, -15, 6)))
    assert f.evaluate(0) == ProjectivePoint.of(0)
    assert f.evaluate(1) == ProjectivePoint.of(1)
    assert f.evaluate(Fraction(1, 2)) == ProjectivePoint.of(Fraction(1, 2))


def test_evaluate_poles_and_infinity():
    f = RatFunc(Poly.one(), X - 1)  # 1/(x-1)
    assert f.evaluate(1) == INFINITY
    assert f.evaluate(INFINITY) == ProjectivePoint.of(0)
    g = RatFunc(Poly.monomial(4))
    assert g.evaluate(INFINITY) == INFINITY
    h = RatFunc(Poly((1, 0, 2)), Poly((0, 0, 1)))  # (2x^2+1)/x^2
    assert h.evaluate(INFINITY) == ProjectivePoint.of(2)
    assert h.evaluate(0) == INFINITY


def test_evaluate_symmetric_worked_example():
    num = Poly.monomial(8) * Poly((90, -120, 42))
    den = Poly((42, -120, 90))
    f = RatFunc(num, den)
    assert f.evaluate(1) == ProjectivePoint.of(1)


def test_substitute_reciprocal_power():
    f = RatFunc(Poly.monomial(5))
    g = f.substitute_reciprocal()
    assert g == RatFunc(Poly.one(), Poly.monomial(5))


def test_substitute_reciprocal_is_involution_random():
    rng = random.Random(105)
    done = 0
    while done < 60:
        n, d = random_poly(rng, 4), random_poly(rng, 4)
        if d.is_zero:
            continue
        done += 1
        f = RatFunc(n, d)
        assert f.substitute_reciprocal().substitute_reciprocal() == f


def test_rational_string_round_trip():
    for s in ("0", "7", "-3", "1/5", "-1/2", "22/7"):
        assert format_rational(parse_rational(s)) == s
    assert format_rational(Fraction(6, 4)) == "3/2"


def test_poly_json_round_trip():
    p = Poly((Fraction(1, 5), Fraction(-1, 2), Fraction(1, 3)))
    assert p.to_json() == ["1/5", "-1/2", "1/3"]
    assert Poly.from_json(p.to_json()) == p
    assert Poly().to_json() == []


def test_ratfunc_json_round_trip():
    f = RatFunc(Poly((0, 1)), Poly((1, 1)))
    data = f.to_json()
    assert data == {"num": ["0", "1"], "den": ["1", "1"]}
    assert RatFunc.from_json(data) == f
    # unreduced input is canonicalized on load
    g = RatFunc.from_json({"num": ["0", "2"], "den": ["0", "0", "4"]})
    assert g == RatFunc(Poly((0, 2)), Poly((0, 0, 4)))


def test_poly_str_formatting():
    assert str(Poly((0, 0, 0, 10, -15, 6))) == "6x^5 - 15x^4 + 10x^3"
    assert str(Poly()) == "0"
    assert str(Poly((Fraction(1, 2), -1))) == "-x + 1/2"
    assert str(Poly((0, Fraction(-3, 2), 0, 2))) == "2x^3 - (3/2)x"


def test_projective_point_str():
    assert str(INFINITY) == "inf"
    assert str(ProjectivePoint.of(Fraction(-1, 2))) == "-1/2"

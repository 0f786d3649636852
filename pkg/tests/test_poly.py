"""
Tests for polynomials and rational maps.

Author: Tom Pravetz
License: MIT
"""

import random
from fractions import Fraction

import pytest

from src.errors import ConstantMap, DivisionByZero, InseparableMap, ZeroPolynomial
from src.fixtures import ex61
from src.poly import (
    Poly,
    RationalMap,
    derivative,
    evaluate,
    normalize_map,
    poly_gcd,
    taylor_shift,
    wronskian,
)
from src.valfield import Domain

Q3 = Domain.padic(3)
F3T = Domain.tadic(3)


def z_poly(domain, *coeffs):
    return Poly.from_ints(domain, list(coeffs))


def test_degree_and_zero():
    assert Poly.zero(Q3).degree == -1
    assert z_poly(Q3, 1, 0, 0).degree == 0
    assert Poly.monomial(Q3, 4).degree == 4
    with pytest.raises(ZeroPolynomial):
        Poly.zero(Q3).leading()


def test_taylor_shift():
    assert taylor_shift(Poly.monomial(Q3, 2), 1) == z_poly(Q3, 1, 2, 1)
    P = z_poly(Q3, 5, -1, 0, 2)
    shifted = taylor_shift(P, Q3.from_fraction("1/3"))
    for x in (0, 1, 7):
        assert evaluate(shifted, x) == evaluate(P, Q3.from_int(x) + Fraction(1, 3))


def test_derivative_in_positive_characteristic():
    assert derivative(z_poly(F3T, 0, 1, 0, 1)) == Poly.constant(F3T, 1)
    assert derivative(Poly.monomial(F3T, 3)).is_zero()


def test_division():
    q, r = divmod(z_poly(Q3, -1, 0, 1), z_poly(Q3, -1, 1))
    assert q == z_poly(Q3, 1, 1)
    assert r.is_zero()
    q, r = divmod(z_poly(Q3, 1, 0, 1), z_poly(Q3, 0, 2))
    assert q == z_poly(Q3, 0, Fraction(1, 2))
    assert r == Poly.constant(Q3, 1)
    with pytest.raises(DivisionByZero):
        divmod(z_poly(Q3, 1, 1), Poly.zero(Q3))


def test_gcd_is_monic():
    a = z_poly(Q3, -1, 0, 1) * 3
    b = z_poly(Q3, -2, 2) * 5
    assert poly_gcd(a, b) == z_poly(Q3, -1, 1)


def test_normalize_cancels_common_factor():
    f = z_poly(Q3, -1, 1) * z_poly(Q3, 2, 1)
    g = z_poly(Q3, -2, 2)
    phi = normalize_map(f, g)
    assert phi.f == z_poly(Q3, 1, Fraction(1, 2))
    assert phi.g == Poly.constant(Q3, 1)
    assert phi.degree == 1


def test_normalize_rejects_degenerate_maps():
    with pytest.raises(ZeroPolynomial):
        normalize_map(z_poly(Q3, 0, 1), Poly.zero(Q3))
    with pytest.raises(ConstantMap):
        normalize_map(Poly.zero(Q3), z_poly(Q3, 1))
    with pytest.raises(ConstantMap):
        normalize_map(z_poly(Q3, 2, 2), z_poly(Q3, 1, 1))
    with pytest.raises(InseparableMap):
        normalize_map(Poly.monomial(F3T, 3), Poly.constant(F3T, 1))
    with pytest.raises(InseparableMap):
        normalize_map(Poly.monomial(F3T, 3) + F3T.uniformizer(), Poly.constant(F3T, 1))


def test_wronskian():
    phi = normalize_map(Poly.monomial(Q3, 4) + 3, Poly.monomial(Q3, 1))
    assert wronskian(phi) == z_poly(Q3, -3, 0, 0, 0, 3)


def test_local_degrees():
    phi = ex61(3)
    assert phi.local_degree(None) == 3
    assert phi.local_degree(0) == 1
    square = RationalMap.from_polys(Poly.monomial(Q3, 2))
    assert square.local_degree(0) == 2
    assert square.local_degree(1) == 1
    inverse = normalize_map(Poly.constant(Q3, 1), Poly.monomial(Q3, 1))
    assert inverse.local_degree(0) == 1
    assert inverse.value_at(0) is None
    assert inverse.value_at_infinity() == 0


def test_invert_about():
    square = RationalMap.from_polys(Poly.monomial(Q3, 2))
    moved = square.invert_about(1)
    assert moved.f == z_poly(Q3, 1, 2, 1)
    assert moved.g == Poly.monomial(Q3, 2)


def test_post_compose():
    square = RationalMap.from_polys(Poly.monomial(Q3, 2))
    flipped = square.post_compose(0, 1, 1, 0)
    assert flipped.f == Poly.constant(Q3, 1)
    assert flipped.g == Poly.monomial(Q3, 2)
    with pytest.raises(ValueError):
        square.post_compose(1, 1, 1, 1)


def test_precompose_affine():
    square = RationalMap.from_polys(Poly.monomial(Q3, 2))
    F, G = square.precompose_affine(1, 3)
    assert F == z_poly(Q3, 1, 6, 9)
    assert G == Poly.constant(Q3, 1)


def test_json_round_trip():
    data = {"domain": {"tag": "Qp", "p": 3}, "f": ["3", "0", "0", "0", "1"], "g": ["0", "1"]}
    phi = RationalMap.from_json(data)
    assert phi.to_json() == data
    tadic = RationalMap.from_coefficients(F3T, [{"num": [0, 1]}, 1, 1])
    assert tadic.f.coeff(0) == F3T.uniformizer()


def random_coefficient(domain, rng):
    if domain.is_padic:
        return domain.from_fraction(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
    p = domain.p
    return domain.from_gf_lists([rng.randrange(p) for _ in range(3)], [rng.randrange(p), 1])


def random_poly(domain, rng, degree):
    return Poly(domain, [random_coefficient(domain, rng) for _ in range(degree + 1)])


@pytest.mark.parametrize("domain", [Q3, F3T], ids=str)
def test_taylor_shift_round_trip(domain):
    rng = random.Random(30)
    for degree in range(31):
        P = random_poly(domain, rng, degree)
        a = random_coefficient(domain, rng)
        shifted = taylor_shift(P, a)
        assert shifted.degree == P.degree
        assert taylor_shift(shifted, -a) == P
        assert evaluate(shifted, domain.zero()) == evaluate(P, a)


@pytest.mark.parametrize("domain", [Q3, Domain.padic(2), F3T], ids=str)
def test_wronskian_degree_bound(domain):
    rng = random.Random(domain.p)
    checked = 0
    while checked < 60:
        try:
            f = random_poly(domain, rng, rng.randint(0, 7))
            phi = normalize_map(f, random_poly(domain, rng, rng.randint(0, 7)))
        except (ConstantMap, InseparableMap, ZeroPolynomial):
            continue
        W = wronskian(phi)
        assert not W.is_zero()
        assert W.degree <= 2 * phi.degree - 2, str(phi)
        checked += 1

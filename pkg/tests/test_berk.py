"""
Tests for points of the Berkovich line.

Author: Tom Pravetz
License: MIT
"""

import random
from fractions import Fraction

import pytest

from src.berk import (
    BerkPoint,
    Ordering,
    compare,
    diam,
    invert_point,
    invert_segment,
    join,
    rho,
    seminorm_ord,
)
from src.errors import InfiniteDistance
from src.poly import Poly
from src.valfield import INF, NEG_INF, Domain

Q3 = Domain.padic(3)


def zeta(center, s):
    return BerkPoint(Q3.from_fraction(Fraction(center)), s)


def test_distance():
    assert rho(zeta(0, 0), zeta(0, 1)) == 1
    assert rho(zeta(0, 2), zeta(3, 2)) == 2
    assert rho(zeta(0, Fraction(1, 2)), zeta(0, Fraction(1, 2))) == 0
    with pytest.raises(InfiniteDistance):
        rho(BerkPoint.classical(Q3.zero()), BerkPoint.gauss(Q3))


def test_equality_ignores_choice_of_center():
    assert zeta(0, 1) == zeta(3, 1)
    assert zeta(0, 1) != zeta(1, 1)
    assert hash(zeta(0, 1)) == hash(zeta(3, 1))


def test_compare():
    gauss = BerkPoint.gauss(Q3)
    assert compare(gauss, zeta(0, 1)) is Ordering.ABOVE
    assert compare(zeta(0, 1), gauss) is Ordering.BELOW
    assert compare(zeta(1, 1), zeta(0, 1)) is Ordering.INCOMPARABLE
    assert compare(zeta(9, 2), zeta(0, 2)) is Ordering.EQUAL


def test_point_types():
    assert zeta(0, 1).point_type == "II"
    assert zeta(0, Fraction(1, 2)).point_type == "III"
    assert BerkPoint.classical(Q3.one()).point_type == "I"
    assert diam(zeta(0, 3)) == 3
    with pytest.raises(ValueError):
        zeta(0, NEG_INF)


def test_seminorm():
    P = Poly.from_ints(Q3, [-3, 0, 1])
    assert seminorm_ord(P, zeta(0, Fraction(1, 2))) == 1
    assert seminorm_ord(P, BerkPoint.gauss(Q3)) == 0
    assert seminorm_ord(P, BerkPoint.classical(Q3.from_int(3))) == 1
    assert seminorm_ord(Poly.zero(Q3), zeta(0, 0)) == INF


def test_invert_point():
    image = invert_point(zeta(0, 1), 0)
    assert image == zeta(0, -1)
    image = invert_point(zeta(9, 1), 1)
    assert image.s == 1
    assert image.center == Fraction(1, 8)
    assert invert_point(BerkPoint.classical(Q3.from_int(3)), 0).s == INF
    with pytest.raises(ValueError):
        invert_point(BerkPoint.classical(Q3.zero()), 0)


def test_join():
    top = join(zeta(0, 2), zeta(3, 2))
    assert top.s == 1
    assert top.contains(0) and top.contains(3)
    assert join(zeta(0, 1), BerkPoint.classical(Q3.from_int(9))) == zeta(0, 1)


def test_json():
    point = zeta(Fraction(1, 3), Fraction(1, 2))
    assert point.to_json() == {"center": "1/3", "s": "1/2"}
    assert BerkPoint.from_json(Q3, {"center": "1/3", "s": "1/2"}) == point


def random_point(rng):
    center = Fraction(rng.randint(-40, 40), rng.choice([1, 1, 2, 3, 9]))
    return zeta(center, Fraction(rng.randint(-9, 9), rng.randint(1, 3)))


def random_poly(rng):
    return Poly(Q3, [Q3.from_fraction(Fraction(rng.randint(-20, 20), rng.randint(1, 6))) for _ in range(rng.randint(1, 7))])


def test_distance_is_additive_through_the_join():
    rng = random.Random(1)
    for _ in range(500):
        x, y = random_point(rng), random_point(rng)
        top = join(x, y)
        assert compare(top, x) in (Ordering.ABOVE, Ordering.EQUAL)
        assert compare(top, y) in (Ordering.ABOVE, Ordering.EQUAL)
        assert rho(x, y) == rho(x, top) + rho(top, y)
        assert rho(x, y) == rho(y, x)


def test_seminorm_does_not_depend_on_the_center():
    rng = random.Random(2)
    for _ in range(200):
        x = random_point(rng)
        P, Q = random_poly(rng), random_poly(rng)
        k = -(-x.s.numerator // x.s.denominator)
        other = BerkPoint(x.center + Q3.from_int(rng.randint(1, 8)) * Q3.uniformizer_power(k), x.s)
        assert other == x
        assert seminorm_ord(P, other) == seminorm_ord(P, x)
        if not P.is_zero() and not Q.is_zero():
            assert seminorm_ord(P * Q, x) == seminorm_ord(P, x) + seminorm_ord(Q, x)


def test_invert_segment_bends_at_the_moved_point():
    below, above = invert_segment(Q3, 0, 0, 3, 9)
    assert (below.center, below.lo, below.hi, below.reflect) == (0, -2, 0, True)
    assert (above.center, above.lo, above.hi, above.reflect) == (Fraction(-1, 9), -2, -1, False)
    assert above.source(-1) == 3
    (only,) = invert_segment(Q3, 9, -1, 4, 9)
    assert (only.lo, only.hi, only.source(-4)) == (-4, 1, 4)


def test_invert_segment_follows_invert_point():
    rng = random.Random(3)
    for _ in range(100):
        x = random_point(rng)
        c0 = Fraction(rng.randint(-20, 20), rng.choice([1, 3]))
        s1 = x.s + rng.randint(0, 6)
        for piece in invert_segment(Q3, x.center, x.s, s1, c0):
            for t in (piece.lo, (piece.lo + piece.hi) / 2, piece.hi):
                s = piece.source(t)
                assert x.s <= s <= s1
                assert invert_point(zeta(x.center.value, s), c0) == BerkPoint(piece.center, t)

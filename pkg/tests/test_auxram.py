"""
Tests for the auxiliary polynomial, visible ramification and multiplicities.

Author: Tom Pravetz
License: MIT
"""

import random
from fractions import Fraction

import pytest

from src.auxram import (
    TAU,
    TFRAK,
    DirectionClass,
    aux_coeffs,
    aux_direct,
    classify_direction,
    is_ramified,
    min_root_radius,
    multiplicity,
    multiplicity_reduction,
    multiplicity_zero_count,
    profile_segment,
    ramified_intervals,
    ramified_reach,
    small_root_bound,
    t_frak,
    tau,
)
from src.berk import BerkPoint
from src.errors import (
    ConstantMap,
    InfiniteDistance,
    InseparableMap,
    NonIntegerRadius,
    PoleInDisk,
    ProbeNotInBall,
    Undecidable,
    ZeroPolynomial,
)
from src.fixtures import ex61, ex63
from src.hull import dist_to_hull, sample_points
from src.poly import Poly, RationalMap, normalize_map, wronskian
from src.valfield import INF, NEG_INF, Domain

Q3 = Domain.padic(3)
F3T = Domain.tadic(3)


def square_map():
    return RationalMap.from_polys(Poly.monomial(Q3, 2))


def test_aux_coefficients_of_ex63():
    phi = ex63(3)
    aux = aux_coeffs(phi)
    assert aux.degree == 3
    assert aux.coeffs[0] == wronskian(phi)
    assert aux.coeffs[1] == Poly.monomial(Q3, 3, 6)
    assert aux.coeffs[2] == Poly.monomial(Q3, 2, 4)
    assert aux.coeffs[3] == Poly.monomial(Q3, 1)
    assert aux == aux_direct(phi)


def test_aux_direct_agrees_over_fpt():
    t = F3T.uniformizer()
    phi = normalize_map(Poly(F3T, [0, 1, t, 0, 1]), Poly(F3T, [1, t]))
    assert aux_coeffs(phi) == aux_direct(phi)


def test_tau_at_gauss_point():
    phi = ex63(3)
    gauss = BerkPoint.gauss(Q3)
    assert t_frak(phi, gauss) == Fraction(1, 2)
    assert tau(phi, gauss) == Fraction(1, 2)
    assert small_root_bound(phi, gauss) == Fraction(1, 2)


def test_min_root_radius():
    phi = ex63(3)
    assert min_root_radius(phi, 0) == NEG_INF
    assert min_root_radius(phi, 1) == INF


def test_classify_direction():
    phi = ex63(3)
    gauss = BerkPoint.gauss(Q3)
    assert classify_direction(phi, gauss, 3) is DirectionClass.EXCEPTIONAL_AUX
    assert classify_direction(phi, gauss, 1) is DirectionClass.EXCEPTIONAL_CRIT
    assert classify_direction(phi, gauss, 2) is DirectionClass.EXCEPTIONAL_CRIT
    with pytest.raises(ProbeNotInBall):
        classify_direction(phi, BerkPoint(Q3.zero(), 1), 1)


def test_degree_one_map_has_no_visible_ramification():
    phi = RationalMap.from_polys(Poly.from_ints(Q3, [1, 1]))
    gauss = BerkPoint.gauss(Q3)
    assert t_frak(phi, gauss) == NEG_INF
    assert tau(phi, gauss) == 0
    profile = profile_segment(phi, 0, 0, 2, TAU)
    assert profile.maximum() == (0, 0)
    with pytest.raises(ValueError):
        profile_segment(phi, 0, 0, 2, TFRAK)


def test_square_map_multiplicities():
    phi = square_map()
    gauss = BerkPoint.gauss(Q3)
    off_hull = BerkPoint(Q3.one(), 1)
    assert multiplicity(phi, gauss) == 2
    assert multiplicity(phi, off_hull) == 1
    assert t_frak(phi, gauss) == 0
    assert t_frak(phi, off_hull) == -1
    assert is_ramified(phi, gauss)
    assert not is_ramified(phi, off_hull)
    assert is_ramified(phi, BerkPoint.classical(Q3.zero()))
    assert not is_ramified(phi, BerkPoint.classical(Q3.one()))


def test_square_map_profile_is_flat():
    profile = profile_segment(square_map(), 0, 0, 1, TFRAK)
    assert [(q.s0, q.s1, q.alpha, q.beta) for q in profile.pieces] == [(0, 1, 0, 0)]


def test_ex63_profile_and_locus():
    phi = ex63(3)
    profile = profile_segment(phi, 0, 0, 1, TFRAK)
    assert profile.breakpoints == [0, Fraction(1, 4), 1]
    assert profile.value_at(Fraction(1, 4)) == 0
    assert profile.value_at(1) == -1
    assert profile.maximum() == (Fraction(1, 2), 0)
    cells = ramified_intervals(phi, 0, 0, 1)
    assert ramified_reach(cells, Fraction(0)) == Fraction(1, 4)
    assert cells[-1].ramified is False


def test_tau_profile_in_characteristic_p():
    t = F3T.uniformizer()
    phi = RationalMap.from_polys(Poly(F3T, [0, 0, 0, 1, t]))
    profile = profile_segment(phi, 0, 0, 8, TAU)
    assert [(q.alpha, q.beta) for q in profile.pieces] == [(Fraction(1, 2), Fraction(1, 2))]
    for s, expected in ((2, Fraction(3, 2)), (4, Fraction(5, 2)), (8, Fraction(9, 2))):
        assert tau(phi, BerkPoint(F3T.zero(), s)) == expected


def test_zero_count_multiplicity():
    assert multiplicity_zero_count(ex61(3), 0, Fraction(1, 2)) == 1
    inverse = normalize_map(Poly.constant(Q3, 1), Poly.monomial(Q3, 1))
    with pytest.raises(PoleInDisk):
        multiplicity_zero_count(inverse, 0, 0)


def test_errors():
    phi = ex61(3)
    with pytest.raises(NonIntegerRadius):
        multiplicity_reduction(phi, BerkPoint(Q3.zero(), Fraction(1, 2)))
    with pytest.raises(InfiniteDistance):
        t_frak(phi, BerkPoint.classical(Q3.zero()))
    with pytest.raises(ValueError):
        profile_segment(phi, 0, 1, 0)


def random_map(domain, rng):
    def poly():
        coeffs = [Fraction(rng.randint(-9, 9), rng.choice([1, 1, 2, 3])) for _ in range(rng.randint(1, 6))]
        return Poly(domain, [domain.from_fraction(c) for c in coeffs])

    return normalize_map(poly(), poly())


def random_maps(domain, rng, count):
    maps = []
    while len(maps) < count:
        try:
            phi = random_map(domain, rng)
        except (ConstantMap, InseparableMap, ZeroPolynomial):
            continue
        if phi.degree > 1:
            maps.append(phi)
    return maps


def test_visible_ramification_is_unchanged_by_moebius_post_composition():
    rng = random.Random(4)
    for phi in random_maps(Q3, rng, 25):
        while True:
            alpha, beta, gamma, delta = (rng.randint(-5, 5) for _ in range(4))
            if alpha * delta - beta * gamma:
                break
        moved = phi.post_compose(alpha, beta, gamma, delta)
        aux, moved_aux = aux_coeffs(phi), aux_coeffs(moved)
        assert moved_aux.nonzero_indices() == aux.nonzero_indices()
        for x in sample_points(Q3, 10, rng):
            assert t_frak(moved, x, moved_aux) == t_frak(phi, x, aux), (str(phi), str(x))


def test_small_root_bound_is_attained_in_generic_directions():
    rng = random.Random(5)
    generic = 0
    for phi in random_maps(Q3, rng, 25):
        aux = aux_coeffs(phi)
        for x in sample_points(Q3, 8, rng):
            k = -(-x.s.numerator // x.s.denominator)
            y = x.center + Q3.from_int(rng.choice([1, 2, 4, 5, 7])) * Q3.uniformizer_power(k + rng.randint(0, 2))
            if classify_direction(phi, x, y, aux) is not DirectionClass.GENERIC:
                continue
            assert min_root_radius(phi, y, aux) == small_root_bound(phi, x, aux), (str(phi), str(x), str(y))
            generic += 1
    assert generic > 0


def test_ramification_when_infinity_is_not_critical():
    domain = Domain.padic(2)
    phi = normalize_map(Poly.monomial(domain, 1), Poly.from_ints(domain, [1, 0, 1]))
    assert phi.local_degree(None) == 1
    x = BerkPoint(domain.zero(), -2)
    assert multiplicity(phi, x) == 1
    assert dist_to_hull(phi, x) == 3
    assert not is_ramified(phi, x)
    other = normalize_map(
        Poly.monomial(domain, 2, Fraction(-3, 4)),
        Poly(domain, [domain.from_fraction(Fraction(1, 2)), domain.from_fraction(Fraction(-5, 8)), domain.one()]),
    )
    assert other.local_degree(None) == 1
    assert not is_ramified(other, BerkPoint(domain.from_fraction(Fraction(1, 4)), -2))


@pytest.mark.parametrize(
    "phi",
    [
        normalize_map(Poly.monomial(Domain.padic(2), 1), Poly.from_ints(Domain.padic(2), [1, 0, 1])),
        normalize_map(Poly.monomial(Q3, 2), Poly.from_ints(Q3, [-1, 1])),
        normalize_map(Poly.from_ints(Q3, [1, 0, 0, 3]), Poly.from_ints(Q3, [0, 0, 1])),
    ],
    ids=str,
)
def test_ramification_agrees_with_multiplicity(phi):
    rng = random.Random(6)
    decided = 0
    for x in sample_points(phi.domain, 40, rng, max_denominator=1):
        try:
            m = multiplicity(phi, x)
        except Undecidable:
            continue
        assert is_ramified(phi, x) == (m > 1), str(x)
        decided += 1
    assert decided > 0

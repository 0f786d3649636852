"""
Acceptance checks: the known example values and randomized sweeps.

Author: Tom Pravetz
License: MIT
"""

import random
from fractions import Fraction

import pytest

from src.apps import rolle_check
from src.auxram import TAU, aux_coeffs, aux_direct, is_ramified, profile_segment, t_frak, tau
from src.berk import BerkPoint
from src.errors import ConstantMap, InseparableMap, Undecidable, ZeroPolynomial
from src.fixtures import ex61, ex63, run_example_61, run_example_62, run_example_63
from src.hull import (
    TAME,
    WILD_CHAR_ZERO,
    binomial_val_enumerate,
    binomial_val_min,
    check_theorem_d,
    dist_to_hull,
    fuzz_analyze,
    r0_ord,
    sample_points,
    tau_limit_at_critical,
)
from src.poly import Poly, RationalMap, normalize_map, wronskian
from src.valfield import INF, Domain


def failed_checks(result):
    return [check.to_json() for check in result.checks if not check.passed]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_example_61(p):
    result = run_example_61(p)
    assert result.passed, failed_checks(result)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_example_63(p):
    result = run_example_63(p)
    assert result.passed, failed_checks(result)
    # the ramified locus stops strictly short of tau at the Gauss point
    assert Fraction(1, p + 1) < tau(ex63(p), BerkPoint.gauss(Domain.padic(p)))


@pytest.mark.parametrize("n", range(1, 7))
def test_example_62(n):
    result = run_example_62(n)
    assert result.passed, failed_checks(result)


def random_coefficient(domain, rng):
    if domain.is_padic:
        return domain.from_fraction(Fraction(rng.randint(-12, 12), rng.choice([1, 1, 2, 3, 5])))
    p = domain.p
    return domain.from_gf_lists([rng.randrange(p) for _ in range(3)], [rng.randrange(p), 1])


def random_map(domain, rng, max_degree=8):
    f = Poly(domain, [random_coefficient(domain, rng) for _ in range(rng.randint(1, max_degree + 1))])
    g = Poly(domain, [random_coefficient(domain, rng) for _ in range(rng.randint(1, max_degree + 1))])
    return normalize_map(f, g)


@pytest.mark.parametrize("domain", [Domain.padic(3), Domain.padic(2), Domain.tadic(3), Domain.tadic(2)])
def test_aux_formulas_agree(domain):
    rng = random.Random(domain.p * 100 + domain.is_padic)
    checked = 0
    while checked < 50:
        try:
            phi = random_map(domain, rng)
        except (ConstantMap, InseparableMap, ZeroPolynomial):
            continue
        aux = aux_coeffs(phi)
        assert aux == aux_direct(phi), str(phi)
        assert aux.coeffs[0] == wronskian(phi)
        assert aux.degree == phi.degree - 1
        assert not aux.coeffs[-1].is_zero()
        checked += 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_binomial_minimum(p):
    for m in range(2, 201):
        low, argmin = binomial_val_min(m, p)
        enumerated, argmins = binomial_val_enumerate(m, p)
        assert low == enumerated
        assert argmin in argmins
        assert argmin == (p if m % p == 0 else m)


def pole_at(domain, rng, c):
    """P(1/(z - c)) for a random P with P'(0) != 0, so infinity is not critical and c is."""
    degree = rng.randint(2, 5)
    coeffs = [rng.randint(-9, 9), rng.choice([1, -1, 2, 3])] + [rng.randint(-9, 9) for _ in range(degree - 2)]
    coeffs.append(rng.choice([1, -1, 2, domain.p]))
    base = Poly.from_ints(domain, [-c, 1])
    F = sum((base ** (degree - i) * a for i, a in enumerate(coeffs)), Poly.zero(domain))
    return normalize_map(F, base ** degree)


def pole_free_at_infinity(domain, rng):
    """f/g with 1 <= deg g <= deg f - 2, so infinity is critical."""
    degree = rng.randint(3, 6)
    f = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([1, -1, 2, 3, domain.p])]
    g = [rng.randint(-9, 9) for _ in range(rng.randint(1, degree - 2))] + [1]
    return normalize_map(Poly.from_ints(domain, f), Poly.from_ints(domain, g))


def sweep_map(kind, domain, rng):
    if kind == "polynomial":
        degree = rng.randint(2, 6)
        coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([1, -1, 2, 3, domain.p])]
        return RationalMap.from_polys(Poly.from_ints(domain, coeffs))
    if kind == "infinity_unramified":
        return pole_at(domain, rng, rng.randint(-4, 4))
    return pole_free_at_infinity(domain, rng)


@pytest.mark.parametrize("kind", ["polynomial", "infinity_unramified", "infinity_ramified"])
def test_theorem_d_sweep(kind):
    rng = random.Random(f"2024-{kind}")
    total = checked = maps = 0
    while maps < 30:
        domain = Domain.padic(rng.choice([2, 3, 5]))
        try:
            phi = sweep_map(kind, domain, rng)
        except (ConstantMap, InseparableMap, ZeroPolynomial):
            continue
        if kind == "infinity_unramified":
            assert phi.local_degree(None) == 1, str(phi)
        maps += 1
        report = check_theorem_d(phi, sample_points(domain, 20, rng))
        assert not report.violations, (str(phi), report.violations)
        assert report.checked + len(report.skipped) == 20
        total += 20
        checked += report.checked
    assert total == 600
    assert checked > 0


def test_fuzz_near_critical_points():
    rng = random.Random(11)
    for case in range(100):
        p = rng.choice([2, 3, 5])
        domain = Domain.padic(p)
        wild = case % 2 == 0
        if wild:
            m = p
        else:
            m = rng.choice([k for k in range(2, 8) if k % p])
        extras = [p * rng.randint(-4, 4) for _ in range(rng.randint(0, 3))]
        f = Poly.from_ints(domain, [0] * m + [1] + extras)
        v = int(r0_ord(m, p)) + rng.randint(1, 3)
        delta = rng.randrange(1, p) * p ** v

        report = fuzz_analyze(f, delta)
        assert report.agrees, report.to_json()
        assert report.open_count == 1
        if wild:
            assert report.case == WILD_CHAR_ZERO
            assert report.computed_radius == v + Fraction(1, p - 1)
            assert report.closed_count == p
        else:
            assert report.case == TAME
            assert report.computed_radius == v
            assert report.closed_count == m


def test_fuzz_worked_instance():
    report = fuzz_analyze(Poly.from_ints(Domain.padic(3), [0, 0, 0, 1, 3]), 9)
    assert report.polygon.vertices[:2] == ((1, 5), (3, 0))


@pytest.mark.parametrize("phi", [ex61(3), ex63(3), ex61(5), ex63(2)], ids=str)
def test_visible_ramification_sign(phi):
    rng = random.Random(5)
    for x in sample_points(phi.domain, 40, rng):
        try:
            ramified = is_ramified(phi, x)
        except Undecidable:
            continue
        value = t_frak(phi, x)
        if ramified:
            assert value >= 0, str(x)
        elif dist_to_hull(phi, x) > 0:
            assert value < 0, str(x)
        else:
            assert value == 0, str(x)


def test_rolle_sharpness():
    phi = ex61(3)
    report = rolle_check(phi, 0, Fraction(0))
    assert report.zeros_in_disk >= 2
    assert report.verdict
    assert report.critical_found_at_ord == Fraction(-1, 2)
    assert not rolle_check(phi, 0, Fraction(0), shift_override=Fraction(0)).verdict


def test_tau_limits_at_critical_points():
    Q3, F3T = Domain.padic(3), Domain.tadic(3)
    t = F3T.uniformizer()
    square = RationalMap.from_polys(Poly.monomial(Q3, 2))
    cube = RationalMap.from_polys(Poly.monomial(Q3, 3))
    wild = RationalMap.from_polys(Poly(F3T, [0, 0, 0, 1, t]))
    assert tau_limit_at_critical(square, 0) == 0
    assert tau_limit_at_critical(cube, 0) == Fraction(1, 2)
    assert tau_limit_at_critical(wild, 0) == INF

    profile = profile_segment(wild, 0, 0, 8, TAU)
    values = [profile.value_at(Fraction(s)) for s in (2, 4, 8)]
    assert values == sorted(values)
    assert values[-1] > 4

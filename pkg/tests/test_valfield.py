"""
Tests for valued fields.

Author: Tom Pravetz
License: MIT
"""

import random
from fractions import Fraction

import pytest

from src.errors import DivisionByZero, DomainMismatch, HenselConditionFailed
from src.poly import Poly
from src.valfield import (
    INF,
    NEG_INF,
    Domain,
    PAdicApprox,
    arith,
    ext_from_str,
    ext_to_str,
    hensel_lift,
    integral_primitive,
    ord,
)

Q3 = Domain.padic(3)
F3T = Domain.tadic(3)


def test_padic_valuations():
    assert Q3.from_fraction(Fraction(9, 2)).ord() == 2
    assert Q3.from_fraction("2/27").ord() == -3
    assert Q3.from_int(7).ord() == 0
    assert ord(Q3.zero()) == INF


def test_tadic_valuations():
    assert F3T.t_power(-2).ord() == -2
    # (1 + t) / t^3
    assert F3T.from_gf_lists([1, 1], [0, 0, 0, 1]).ord() == -3
    assert F3T.uniformizer().ord() == 1


def test_tadic_arithmetic_reduces_mod_p():
    assert F3T.from_int(3).is_zero()
    t = F3T.uniformizer()
    assert (t + 1) * (t + 2) == t * t + 2
    assert (t * t - 1) / (t - 1) == t + 1
    assert t ** -2 == F3T.t_power(-2)


def test_denominators_are_monic_and_reduced():
    x = F3T.from_gf_lists([0, 2], [0, 0, 2])  # 2t / 2t^2
    assert x == F3T.t_power(-1)
    assert x.den == (1, 0)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q3.zero().inverse()
    with pytest.raises(DivisionByZero):
        F3T.from_fraction(Fraction(1, 3))


def test_domain_mismatch():
    with pytest.raises(DomainMismatch):
        Q3.one() + Domain.padic(5).one()
    with pytest.raises(DomainMismatch):
        arith(Q3.one(), F3T.one(), "+")
    with pytest.raises(DomainMismatch):
        Q3.t_power(1)


def test_arith_operators():
    a, b = Q3.from_int(6), Q3.from_fraction("3/2")
    assert arith(a, b, "+") == Fraction(15, 2)
    assert arith(a, b, "-") == Fraction(9, 2)
    assert arith(a, b, "*") == 9
    assert arith(a, b, "/") == 4
    with pytest.raises(ValueError):
        arith(a, b, "^")


def test_residues():
    assert Q3.from_fraction("5/2").residue() == 1
    assert Q3.from_int(6).residue() == 0
    assert F3T.from_gf_lists([2, 1], [1, 1]).residue() == 2
    with pytest.raises(ValueError):
        Q3.from_fraction("1/3").residue()


def test_extended_value_strings():
    assert ext_to_str(Fraction(2, 4)) == "1/2"
    assert ext_to_str(INF) == "inf"
    assert ext_to_str(NEG_INF) == "-inf"
    assert ext_from_str("inf") == INF
    assert ext_from_str("-3/6") == Fraction(-1, 2)


def test_invalid_domains():
    with pytest.raises(ValueError):
        Domain.padic(4)
    with pytest.raises(ValueError):
        Domain("Zp", 3)


def test_json_forms():
    assert Q3.from_fraction("2/4").to_json() == "1/2"
    assert F3T.from_gf_lists([1, 2]).to_json() == {"num": [1, 2], "den": [1]}


def test_integral_primitive_removes_content():
    assert integral_primitive([Fraction(-3), 0, 0, 0, Fraction(3)], 3) == [-1, 0, 0, 0, 1]
    # 1/2 + z/4 -> 2 + z
    assert integral_primitive([Fraction(1, 2), Fraction(1, 4)], 3) == [2, 1]


def test_hensel_lift_square_root_of_two_in_q7():
    domain = Domain.padic(7)
    P = Poly.from_ints(domain, [-2, 0, 1])
    root = hensel_lift(P, PAdicApprox(0, 3, 1, 7), 10)
    assert root.precision == 10
    assert (root.unit ** 2 - 2) % 7 ** 10 == 0


def test_hensel_lift_rejects_bad_start():
    domain = Domain.padic(7)
    P = Poly.from_ints(domain, [-2, 0, 1])
    with pytest.raises(HenselConditionFailed):
        hensel_lift(P, PAdicApprox(0, 1, 1, 7), 10)


def test_padic_approx_validation():
    with pytest.raises(ValueError):
        PAdicApprox(0, 3, 1, 3)
    with pytest.raises(ValueError):
        PAdicApprox(0, 1, 0, 3)
    assert PAdicApprox(1, 2, 2, 3).value() == 6


def random_nonzero(domain, rng):
    if domain.is_padic:
        num = rng.choice([-1, 1]) * rng.randint(1, 500)
        return domain.from_fraction(Fraction(num, rng.randint(1, 500)))
    p = domain.p
    num = [rng.randrange(p) for _ in range(rng.randint(1, 5))]
    num[rng.randrange(len(num))] = rng.randrange(1, p)
    return domain.from_gf_lists(num, [rng.randrange(p) for _ in range(rng.randint(0, 3))] + [1])


@pytest.mark.parametrize("domain", [Q3, Domain.padic(2), F3T], ids=str)
def test_valuation_is_ultrametric_and_multiplicative(domain):
    rng = random.Random(domain.p * 10 + domain.is_padic)
    pairs = 10000 if domain.is_padic else 2000
    for _ in range(pairs):
        x, y = random_nonzero(domain, rng), random_nonzero(domain, rng)
        assert (x + y).ord() >= min(x.ord(), y.ord()), (x, y)
        assert (x * y).ord() == x.ord() + y.ord(), (x, y)
        if x.ord() != y.ord():
            assert (x - y).ord() == min(x.ord(), y.ord()), (x, y)


def test_hensel_lift_square_root_of_minus_one_in_q5():
    domain = Domain.padic(5)
    root = hensel_lift(Poly.from_ints(domain, [1, 0, 1]), PAdicApprox(0, 2, 1, 5), 2)
    assert root.unit == 7
    assert (root.unit ** 2 + 1) % 25 == 0


def test_hensel_lift_of_a_linear_factor_is_exact():
    domain = Domain.padic(5)
    root = hensel_lift(Poly.from_ints(domain, [-3, 1]), PAdicApprox(0, 3, 1, 5), 6)
    assert root.unit == 3
    assert root.value() == 3


@pytest.mark.parametrize("p", [3, 5, 7])
def test_hensel_lift_reaches_the_target_precision(p):
    rng = random.Random(p)
    domain = Domain.padic(p)
    lifted = 0
    while lifted < 40:
        r = rng.randint(-200, 200)
        cofactor = [rng.randint(-20, 20) for _ in range(rng.randint(0, 4))] + [1]
        if r % p == 0 or sum(c * r ** i for i, c in enumerate(cofactor)) % p == 0:
            continue
        P = Poly.from_ints(domain, [-r, 1]) * Poly.from_ints(domain, cofactor)
        target = rng.randint(2, 12)
        root = hensel_lift(P, PAdicApprox(0, r % p, 1, p), target)
        coeffs = [int(c.value) for c in P.coeffs]
        value = sum(c * root.unit ** i for i, c in enumerate(coeffs))
        assert value % p ** target == 0
        assert root.unit == r % p ** target
        lifted += 1

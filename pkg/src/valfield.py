"""
Valued fields for berkram.

Exact arithmetic and valuations for the two coefficient domains the library
works over:

* ``Qp``: rational numbers with the p-adic valuation;
* ``Fpt``: rational functions in t over GF(p) with the t-adic valuation.

All valuations are exact rationals in ord units (ord(p) = 1 or ord(t) = 1),
with ``INF`` standing for the valuation of zero. Polynomials over GF(p) are
handled with ``sympy.polys.galoistools`` in its dense big-endian format.

Author: Tom Pravetz
License: MIT
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from sympy import isprime
from sympy.ntheory import multiplicity
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_gcd,
    gf_monic,
    gf_mul,
    gf_neg,
    gf_quo,
    gf_quo_ground,
    gf_strip,
    gf_sub,
)

from .errors import DivisionByZero, DomainMismatch, HenselConditionFailed

logger = logging.getLogger(__name__)

INF = math.inf
NEG_INF = -math.inf

# A valuation: an exact rational, or +/- infinity.
ExtVal = Union[Fraction, float]

GFPoly = Tuple[int, ...]


def is_infinite(value: ExtVal) -> bool:
    """Return True for the infinite valuations."""
    return isinstance(value, float) and math.isinf(value)


def ext_to_str(value: ExtVal) -> str:
    """Serialize an extended valuation: canonical rational string or "inf"."""
    if value == INF:
        return "inf"
    if value == NEG_INF:
        return "-inf"
    return str(Fraction(value))


def ext_from_str(text: Union[str, int, Fraction]) -> ExtVal:
    """Parse an extended valuation written as "a/b", an integer, or "inf"."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    cleaned = str(text).strip().lower()
    if cleaned in ("inf", "+inf", "infinity"):
        return INF
    if cleaned in ("-inf", "-infinity"):
        return NEG_INF
    return Fraction(cleaned)


def _gf_clean(poly: Iterable[Any]) -> GFPoly:
    """Strip a galoistools polynomial and convert its entries to plain ints."""
    return tuple(int(c) for c in gf_strip(list(poly)))


def _gf_order_at_zero(poly: GFPoly) -> int:
    """Order of vanishing at t = 0 of a nonzero big-endian polynomial."""
    order = 0
    for coeff in reversed(poly):
        if coeff:
            return order
        order += 1
    return order


@dataclass(frozen=True)
class Domain:
    """
    A coefficient domain.

    Attributes:
        tag: "Qp" for rationals with the p-adic valuation, "Fpt" for GF(p)(t)
        p: The residue characteristic
    """

    tag: str
    p: int

    def __post_init__(self) -> None:
        if self.tag not in ("Qp", "Fpt"):
            raise ValueError(f"Unknown domain tag: {self.tag}")
        if not isprime(self.p):
            raise ValueError(f"Residue characteristic must be prime, got: {self.p}")

    @classmethod
    def padic(cls, p: int) -> "Domain":
        """The rationals with the p-adic valuation."""
        return cls("Qp", p)

    @classmethod
    def tadic(cls, p: int) -> "Domain":
        """GF(p)(t) with the t-adic valuation."""
        return cls("Fpt", p)

    @property
    def is_padic(self) -> bool:
        return self.tag == "Qp"

    @property
    def characteristic(self) -> int:
        """Characteristic of the field itself: 0 for Qp, p for Fpt."""
        return 0 if self.is_padic else self.p

    def zero(self) -> "FieldElem":
        return self.from_int(0)

    def one(self) -> "FieldElem":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElem":
        """Image of an integer; reduced mod p in Fpt."""
        if self.is_padic:
            return FieldElem(self, Fraction(n))
        return FieldElem._from_gf(self, (int(n) % self.p,), (1,))

    def from_fraction(self, value: Union[Fraction, int, str]) -> "FieldElem":
        """
        Image of a rational number.

        Raises:
            DivisionByZero: If the denominator vanishes in the domain
        """
        q = Fraction(value)
        if self.is_padic:
            return FieldElem(self, q)
        if q.denominator % self.p == 0:
            raise DivisionByZero(f"{q} has no image in GF({self.p})(t)")
        return self.from_int(q.numerator) / self.from_int(q.denominator)

    def uniformizer(self) -> "FieldElem":
        """The element of valuation one: p for Qp, t for Fpt."""
        if self.is_padic:
            return self.from_int(self.p)
        return FieldElem._from_gf(self, (1, 0), (1,))

    def uniformizer_power(self, k: int) -> "FieldElem":
        return self.uniformizer() ** k

    def t_power(self, k: int, coefficient: int = 1) -> "FieldElem":
        """coefficient * t^k in Fpt (k may be negative)."""
        if self.is_padic:
            raise DomainMismatch("t is only defined in Fpt domains")
        return self.from_int(coefficient) * self.uniformizer_power(k)

    def from_gf_lists(self, num_low: Sequence[int], den_low: Sequence[int] = (1,)) -> "FieldElem":
        """Fpt element from little-endian integer coefficient lists."""
        if self.is_padic:
            raise DomainMismatch("polynomial-in-t coefficients need an Fpt domain")
        num = [int(c) % self.p for c in reversed(list(num_low))]
        den = [int(c) % self.p for c in reversed(list(den_low))]
        return FieldElem._from_gf(self, num, den)

    def to_json(self) -> Dict[str, Any]:
        return {"tag": self.tag, "p": self.p}

    def __str__(self) -> str:
        return f"Q_{self.p}" if self.is_padic else f"F_{self.p}(t)"


class FieldElem:
    """
    An exact element of a Domain.

    Qp elements hold a reduced Fraction. Fpt elements hold a pair of
    big-endian GF(p) coefficient tuples (numerator, monic denominator)
    with no common factor. Instances are immutable.
    """

    __slots__ = ("domain", "_value")

    def __init__(self, domain: Domain, value: Any) -> None:
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("FieldElem is immutable")

    @classmethod
    def _from_gf(cls, domain: Domain, num: Iterable[int], den: Iterable[int]) -> "FieldElem":
        p = domain.p
        num_l = list(_gf_clean(c % p for c in num))
        den_l = list(_gf_clean(c % p for c in den))
        if not den_l:
            raise DivisionByZero("zero denominator")
        if not num_l:
            return cls(domain, ((), (1,)))
        common = gf_gcd(num_l, den_l, p, ZZ)
        if len(common) > 1:
            num_l = gf_quo(num_l, common, p, ZZ)
            den_l = gf_quo(den_l, common, p, ZZ)
        lead, den_l = gf_monic(den_l, p, ZZ)
        num_l = gf_quo_ground(num_l, lead, p, ZZ)
        return cls(domain, (_gf_clean(num_l), _gf_clean(den_l)))

    # Accessors

    @property
    def value(self) -> Fraction:
        """The rational value of a Qp element."""
        if not self.domain.is_padic:
            raise DomainMismatch("value is only defined for Qp elements")
        return self._value

    @property
    def num(self) -> GFPoly:
        """Big-endian numerator of an Fpt element."""
        return self._value[0]

    @property
    def den(self) -> GFPoly:
        """Big-endian monic denominator of an Fpt element."""
        return self._value[1]

    def is_zero(self) -> bool:
        if self.domain.is_padic:
            return self._value == 0
        return not self._value[0]

    def ord(self) -> ExtVal:
        """Exact valuation; INF for zero."""
        if self.is_zero():
            return INF
        if self.domain.is_padic:
            p = self.domain.p
            q = self._value
            return Fraction(
                multiplicity(p, abs(q.numerator)) - multiplicity(p, q.denominator)
            )
        return Fraction(_gf_order_at_zero(self.num) - _gf_order_at_zero(self.den))

    def residue(self) -> int:
        """
        Image in the residue field GF(p) of an element with ord >= 0.

        Raises:
            ValueError: If the element is not integral
        """
        if self.is_zero():
            return 0
        if self.ord() < 0:
            raise ValueError(f"{self} is not integral, it has no residue")
        p = self.domain.p
        if self.ord() > 0:
            return 0
        if self.domain.is_padic:
            q = self._value
            return (q.numerator * pow(q.denominator, -1, p)) % p
        return (self.num[-1] * pow(self.den[-1], -1, p)) % p

    # Arithmetic

    def _coerce(self, other: Any) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} and {other.domain} cannot be mixed")
            return other
        if isinstance(other, int):
            return self.domain.from_int(other)
        if isinstance(other, Fraction):
            return self.domain.from_fraction(other)
        return NotImplemented

    def __add__(self, other: Any) -> "FieldElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.domain.is_padic:
            return FieldElem(self.domain, self._value + other._value)
        p = self.domain.p
        num = gf_add(
            gf_mul(list(self.num), list(other.den), p, ZZ),
            gf_mul(list(other.num), list(self.den), p, ZZ),
            p,
            ZZ,
        )
        den = gf_mul(list(self.den), list(other.den), p, ZZ)
        return FieldElem._from_gf(self.domain, num, den)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        if self.domain.is_padic:
            return FieldElem(self.domain, -self._value)
        return FieldElem(
            self.domain, (_gf_clean(gf_neg(list(self.num), self.domain.p, ZZ)), self.den)
        )

    def __sub__(self, other: Any) -> "FieldElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.domain.is_padic:
            return FieldElem(self.domain, self._value - other._value)
        p = self.domain.p
        num = gf_sub(
            gf_mul(list(self.num), list(other.den), p, ZZ),
            gf_mul(list(other.num), list(self.den), p, ZZ),
            p,
            ZZ,
        )
        den = gf_mul(list(self.den), list(other.den), p, ZZ)
        return FieldElem._from_gf(self.domain, num, den)

    def __rsub__(self, other: Any) -> "FieldElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "FieldElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.domain.is_padic:
            return FieldElem(self.domain, self._value * other._value)
        p = self.domain.p
        num = gf_mul(list(self.num), list(other.num), p, ZZ)
        den = gf_mul(list(self.den), list(other.den), p, ZZ)
        return FieldElem._from_gf(self.domain, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        """
        Multiplicative inverse.

        Raises:
            DivisionByZero: If the element is zero
        """
        if self.is_zero():
            raise DivisionByZero(f"cannot invert zero in {self.domain}")
        if self.domain.is_padic:
            return FieldElem(self.domain, 1 / self._value)
        return FieldElem._from_gf(self.domain, self.den, self.num)

    def __truediv__(self, other: Any) -> "FieldElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "FieldElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.domain.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison and display

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            try:
                other = self._coerce(other)
            except DivisionByZero:
                return False
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.domain == other.domain and self._value == other._value

    def __hash__(self) -> int:
        return hash((self.domain, self._value))

    def to_json(self) -> Any:
        """Qp: "a/b" string; Fpt: {"num": [...], "den": [...]} little-endian."""
        if self.domain.is_padic:
            return str(self._value)
        return {"num": list(reversed(self.num)), "den": list(reversed(self.den))}

    def __str__(self) -> str:
        if self.domain.is_padic:
            return str(self._value)
        num = _gf_to_str(self.num)
        if self.den == (1,):
            return num
        return f"({num})/({_gf_to_str(self.den)})"

    def __repr__(self) -> str:
        return f"FieldElem({self.domain}, {self})"


def _gf_to_str(poly: GFPoly) -> str:
    if not poly:
        return "0"
    terms = []
    degree = len(poly) - 1
    for i, c in enumerate(poly):
        e = degree - i
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = "t" if e == 1 else f"t^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


def ord(x: FieldElem) -> ExtVal:  # noqa: A001 - mirrors the valuation's name
    """Exact valuation of x; INF for zero."""
    return x.ord()


def arith(x: FieldElem, y: FieldElem, op: str) -> FieldElem:
    """
    Apply one of "+", "-", "*", "/" to two elements of the same domain.

    Raises:
        DomainMismatch: If x and y live in different domains
        DivisionByZero: On division by zero
        ValueError: For an unknown operator
    """
    if x.domain != y.domain:
        raise DomainMismatch(f"{x.domain} and {y.domain} cannot be mixed")
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    if op in ("*", "x", "×"):
        return x * y
    if op in ("/", "÷"):
        return x / y
    raise ValueError(f"Unknown operator: {op}")


@dataclass(frozen=True)
class PAdicApprox:
    """
    A p-adic number p^valuation * unit, with unit known modulo p^precision.

    Attributes:
        valuation: Exponent of p
        unit: Integer representative, coprime to p
        precision: Number of known p-adic digits of the unit
        prime: The prime p
    """

    valuation: int
    unit: int
    precision: int
    prime: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError(f"Precision must be >= 1, got: {self.precision}")
        if self.unit % self.prime == 0:
            raise ValueError(f"Unit {self.unit} is divisible by {self.prime}")
        object.__setattr__(self, "unit", self.unit % self.prime ** self.precision)

    def value(self) -> Fraction:
        """The rational representative p^v * u."""
        return Fraction(self.unit) * Fraction(self.prime) ** self.valuation

    def to_json(self) -> Dict[str, Any]:
        return {
            "valuation": self.valuation,
            "unit": self.unit,
            "precision": self.precision,
            "p": self.prime,
        }


def integral_primitive(coeffs: Sequence[Fraction], p: int, shift: int = 0) -> List[int]:
    """
    Integer coefficients of c * P(p^shift * z) with unit p-adic content.

    ``coeffs`` is little-endian. The constant c is chosen so the result has
    integer coefficients whose gcd is prime to p.
    """
    scaled = [Fraction(c) * Fraction(p) ** (shift * i) for i, c in enumerate(coeffs)]
    nonzero = [c for c in scaled if c]
    if not nonzero:
        return [0 for _ in scaled]
    denominator = reduce(math.lcm, (c.denominator for c in nonzero), 1)
    ints = [int(c * denominator) for c in scaled]
    content = reduce(math.gcd, (abs(c) for c in ints if c), 0)
    p_part = p ** multiplicity(p, content)
    return [c // p_part for c in ints]


def _eval_int(coeffs: Sequence[int], x: int) -> int:
    result = 0
    for c in reversed(coeffs):
        result = result * x + c
    return result


def _int_valuation(n: int, p: int) -> ExtVal:
    return INF if n == 0 else multiplicity(p, abs(n))


def hensel_lift(P: Any, x0: PAdicApprox, target_precision: int) -> PAdicApprox:
    """
    Lift an approximate root of P to a root known to target_precision digits.

    P is a polynomial over Q (a Poly over a Qp domain, or a little-endian
    sequence of rationals). The lift works on the primitive integral form of
    P(p^v y), where v is the valuation of x0, and runs Newton's iteration on
    the unit part; the error valuation doubles at every step.

    Args:
        P: Polynomial with rational coefficients
        x0: Starting approximation
        target_precision: Number of p-adic digits wanted for the unit

    Returns:
        PAdicApprox with the same valuation and precision target_precision

    Raises:
        DomainMismatch: If P is not over a Qp domain with the same prime
        HenselConditionFailed: If ord Q(y0) <= 2 ord Q'(y0)
    """
    p = x0.prime
    domain = getattr(P, "domain", None)
    if domain is not None and (not domain.is_padic or domain.p != p):
        raise DomainMismatch(f"Hensel lifting needs a Q_{p} polynomial, got {domain}")

    raw = getattr(P, "coeffs", P)
    coeffs = [c.value if isinstance(c, FieldElem) else Fraction(c) for c in raw]
    q = integral_primitive(coeffs, p, x0.valuation)
    dq = [i * c for i, c in enumerate(q)][1:]

    y = x0.unit
    value = _eval_int(q, y)
    if value == 0:
        return PAdicApprox(x0.valuation, y, target_precision, p)

    k = _int_valuation(_eval_int(dq, y), p)
    if k == INF or _int_valuation(value, p) <= 2 * k:
        raise HenselConditionFailed(
            f"ord Q(y0) = {_int_valuation(value, p)} is not above 2 * ord Q'(y0) = {2 * k}"
        )

    modulus = p ** (target_precision + 2 * k + 1)
    for step in range(64):
        value = _eval_int(q, y)
        if value == 0:
            break
        error = _int_valuation(value, p) - k
        logger.debug(f"Hensel step {step}: y = {y}, root error valuation {error}")
        if error >= target_precision:
            break
        derivative = _eval_int(dq, y)
        scale = p ** k
        correction = (value // scale) * pow(derivative // scale, -1, modulus)
        y = (y - correction) % modulus
    else:
        raise HenselConditionFailed("Hensel iteration did not converge")

    return PAdicApprox(x0.valuation, y, target_precision, p)

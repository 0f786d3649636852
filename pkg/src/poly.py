"""
Polynomials and rational maps for berkram.

Dense univariate polynomials over a Domain (coefficients stored low degree
first, index = exponent), the Taylor shift and derivative, the Wronskian of a
rational map, normalization of a pair (f, g) into a reduced separable map,
and the coordinate changes used when moving points around the projective
line.

Author: Tom Pravetz
License: MIT
"""

import logging
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    ConstantMap,
    DivisionByZero,
    DomainMismatch,
    InseparableMap,
    ZeroPolynomial,
)
from .valfield import Domain, FieldElem

logger = logging.getLogger(__name__)

Coefficient = Union[FieldElem, int, Any]


class Poly:
    """
    A polynomial with coefficients in a Domain.

    Attributes:
        domain: Coefficient domain
        coeffs: Tuple of FieldElem, index = exponent, no trailing zeros
    """

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: Domain, coeffs: Iterable[Coefficient] = ()) -> None:
        elems = [_to_elem(domain, c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        self.domain = domain
        self.coeffs: Tuple[FieldElem, ...] = tuple(elems)

    # Constructors

    @classmethod
    def zero(cls, domain: Domain) -> "Poly":
        return cls(domain, ())

    @classmethod
    def constant(cls, domain: Domain, value: Coefficient) -> "Poly":
        return cls(domain, (value,))

    @classmethod
    def monomial(cls, domain: Domain, degree: int, coefficient: Coefficient = 1) -> "Poly":
        """coefficient * z^degree."""
        return cls(domain, [0] * degree + [coefficient])

    @classmethod
    def from_ints(cls, domain: Domain, values: Sequence[Any]) -> "Poly":
        """Polynomial from little-endian ints, Fractions or "a/b" strings."""
        return cls(domain, values)

    @classmethod
    def from_json(cls, domain: Domain, data: Sequence[Any]) -> "Poly":
        """Inverse of to_json; also accepts plain integers."""
        return cls(domain, [_parse_coefficient(domain, c) for c in data])

    # Basic properties

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FieldElem:
        """Coefficient of z^i (zero outside the stored range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero()

    def leading(self) -> FieldElem:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def order_at_zero(self) -> int:
        """Order of vanishing at z = 0."""
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial vanishes to infinite order")
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return 0

    def order_at(self, c: FieldElem) -> int:
        """Order of vanishing at z = c."""
        return taylor_shift(self, c).order_at_zero()

    def reverse(self, n: Optional[int] = None) -> "Poly":
        """z^n * P(1/z); n defaults to the degree."""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError(f"cannot reverse a degree {self.degree} polynomial at {n}")
        padded = list(self.coeffs) + [self.domain.zero()] * (n + 1 - len(self.coeffs))
        return Poly(self.domain, reversed(padded))

    def scale_variable(self, u: FieldElem) -> "Poly":
        """P(u * z)."""
        result = []
        power = self.domain.one()
        for c in self.coeffs:
            result.append(c * power)
            power = power * u
        return Poly(self.domain, result)

    # Arithmetic

    def _check(self, other: "Poly") -> None:
        if other.domain != self.domain:
            raise DomainMismatch(f"{self.domain} and {other.domain} cannot be mixed")

    def _lift(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.domain, other)

    def __add__(self, other: Any) -> "Poly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.domain, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.domain, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            scalar = _to_elem(self.domain, other)
            return Poly(self.domain, [c * scalar for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.domain)
        out = [self.domain.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(self.domain, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        result = Poly.constant(self.domain, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """
        Euclidean division.

        Raises:
            DivisionByZero: If other is the zero polynomial
        """
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [self.domain.zero()] * max(len(remainder) - other.degree, 0)
        lead_inv = other.leading().inverse()
        for k in range(len(remainder) - 1, other.degree - 1, -1):
            c = remainder[k]
            if c.is_zero():
                continue
            factor = c * lead_inv
            shift = k - other.degree
            quotient[shift] = factor
            for j, b in enumerate(other.coeffs):
                remainder[shift + j] = remainder[shift + j] - factor * b
        return Poly(self.domain, quotient), Poly(self.domain, remainder[: max(other.degree, 0)])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def __call__(self, x: Coefficient) -> FieldElem:
        return evaluate(self, x)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.domain, self.coeffs))

    # Display

    def to_json(self) -> List[Any]:
        """JSON array of coefficients, index = exponent."""
        return [c.to_json() for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            text = str(c)
            if " " in text or (text.startswith("-") and i > 0 and "/" in text):
                text = f"({text})"
            if i == 0:
                terms.append(text)
                continue
            mono = "z" if i == 1 else f"z^{i}"
            terms.append(mono if text == "1" else f"{text}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.domain}, {self})"


def _to_elem(domain: Domain, value: Any) -> FieldElem:
    if isinstance(value, FieldElem):
        if value.domain != domain:
            raise DomainMismatch(f"{value.domain} coefficient in a {domain} polynomial")
        return value
    if isinstance(value, int):
        return domain.from_int(value)
    return domain.from_fraction(value)


def _parse_coefficient(domain: Domain, value: Any) -> FieldElem:
    if isinstance(value, dict):
        return domain.from_gf_lists(value.get("num", [0]), value.get("den", [1]))
    return _to_elem(domain, value)


def taylor_shift(P: Poly, a: Coefficient) -> Poly:
    """
    Return P(z + a), expanding each power binomially.

    Raises:
        DomainMismatch: If a is not in P's domain
    """
    a = _to_elem(P.domain, a)
    if a.is_zero() or P.degree < 1:
        return P
    powers = [P.domain.one()]
    for _ in range(P.degree):
        powers.append(powers[-1] * a)
    shifted = []
    for j in range(P.degree + 1):
        total = P.domain.zero()
        for i in range(j, P.degree + 1):
            c = P.coeffs[i]
            if not c.is_zero():
                total = total + c * powers[i - j] * comb(i, j)
        shifted.append(total)
    return Poly(P.domain, shifted)


def derivative(P: Poly) -> Poly:
    """Formal derivative; i * c_i is taken in the domain, so it vanishes mod p in Fpt."""
    return Poly(P.domain, [c * i for i, c in enumerate(P.coeffs)][1:])


def evaluate(P: Poly, x: Coefficient) -> FieldElem:
    """P(x) by Horner's rule."""
    x = _to_elem(P.domain, x)
    result = P.domain.zero()
    for c in reversed(P.coeffs):
        result = result * x + c
    return result


def poly_gcd(P: Poly, Q: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    a, b = P, Q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def wronskian(phi: "RationalMap") -> Poly:
    """f'g - fg' for phi = f/g."""
    return derivative(phi.f) * phi.g - phi.f * derivative(phi.g)


def normalize_map(f: Poly, g: Poly) -> "RationalMap":
    """
    Reduce f/g to a coprime pair with monic denominator.

    Raises:
        ZeroPolynomial: If g is zero
        ConstantMap: If f/g is constant
        InseparableMap: If the Wronskian vanishes identically
    """
    if f.domain != g.domain:
        raise DomainMismatch(f"{f.domain} and {g.domain} cannot be mixed")
    if g.is_zero():
        raise ZeroPolynomial("the denominator of a rational map must be nonzero")
    if f.is_zero():
        raise ConstantMap("f/g is identically zero")

    common = poly_gcd(f, g)
    if common.degree > 0:
        logger.debug(f"Cancelling common factor {common}")
        f = f // common
        g = g // common
    scale = g.leading().inverse()
    f, g = f * scale, g * scale

    if f.degree <= 0 and g.degree == 0:
        raise ConstantMap(f"f/g reduces to the constant {f.coeff(0)}")
    phi = RationalMap(f, g)
    if wronskian(phi).is_zero():
        raise InseparableMap(f"({f})/({g}) is inseparable over {f.domain}")
    return phi


class RationalMap:
    """
    A reduced separable rational map f/g.

    Build instances with normalize_map() or RationalMap.from_polys(); the
    constructor itself trusts its arguments.

    Attributes:
        f: Numerator
        g: Monic denominator, coprime to f
        domain: Coefficient domain
        degree: max(deg f, deg g)
    """

    def __init__(self, f: Poly, g: Poly) -> None:
        self.f = f
        self.g = g
        self.domain = f.domain
        self.degree = max(f.degree, g.degree)

    @classmethod
    def from_polys(cls, f: Poly, g: Optional[Poly] = None) -> "RationalMap":
        return normalize_map(f, g if g is not None else Poly.constant(f.domain, 1))

    @classmethod
    def from_coefficients(
        cls,
        domain: Domain,
        f: Sequence[Any],
        g: Sequence[Any] = (1,),
    ) -> "RationalMap":
        return normalize_map(Poly.from_json(domain, f), Poly.from_json(domain, g))

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "RationalMap":
        domain = Domain(data["domain"]["tag"], int(data["domain"]["p"]))
        return cls.from_coefficients(domain, data["f"], data.get("g", [1]))

    @property
    def is_polynomial(self) -> bool:
        return self.g.degree == 0

    def value_at(self, c: Coefficient) -> Optional[FieldElem]:
        """phi(c), or None when c is a pole."""
        denominator = evaluate(self.g, c)
        if denominator.is_zero():
            return None
        return evaluate(self.f, c) / denominator

    def value_at_infinity(self) -> Optional[FieldElem]:
        """phi(oo), or None when oo maps to oo."""
        if self.f.degree > self.g.degree:
            return None
        if self.f.degree < self.g.degree:
            return self.domain.zero()
        return self.f.leading() / self.g.leading()

    def local_degree(self, c: Optional[Coefficient]) -> int:
        """
        Local degree of phi at a classical point; None stands for infinity.

        At a point c with finite image this is the order of vanishing of
        f - phi(c) g at c, at a pole it is the order of g.
        """
        if c is None:
            if self.f.degree > self.g.degree:
                return self.f.degree - self.g.degree
            target = self.value_at_infinity()
            f_rev = self.f.reverse(self.degree)
            g_rev = self.g.reverse(self.degree)
            return (f_rev - g_rev * target).order_at_zero()
        target = self.value_at(c)
        if target is None:
            return self.g.order_at(_to_elem(self.domain, c))
        return (self.f - self.g * target).order_at(_to_elem(self.domain, c))

    def post_compose(
        self,
        alpha: Coefficient,
        beta: Coefficient,
        gamma: Coefficient,
        delta: Coefficient,
    ) -> "RationalMap":
        """
        Return sigma o phi for sigma(z) = (alpha z + beta)/(gamma z + delta).

        Raises:
            ValueError: If alpha delta - beta gamma = 0
        """
        alpha, beta, gamma, delta = (_to_elem(self.domain, v) for v in (alpha, beta, gamma, delta))
        if (alpha * delta - beta * gamma).is_zero():
            raise ValueError("degenerate Mobius transformation")
        return normalize_map(
            self.f * alpha + self.g * beta,
            self.f * gamma + self.g * delta,
        )

    def invert_about(self, c0: Coefficient) -> "RationalMap":
        """Return w -> phi(c0 + 1/w); the point c0 moves to infinity."""
        c0 = _to_elem(self.domain, c0)
        f_new = taylor_shift(self.f, c0).reverse(self.degree)
        g_new = taylor_shift(self.g, c0).reverse(self.degree)
        return normalize_map(f_new, g_new)

    def precompose_affine(self, a: Coefficient, u: Coefficient) -> Tuple[Poly, Poly]:
        """Numerator and denominator of z -> phi(a + u z), not renormalized."""
        u = _to_elem(self.domain, u)
        return (
            taylor_shift(self.f, a).scale_variable(u),
            taylor_shift(self.g, a).scale_variable(u),
        )

    def to_json(self) -> Dict[str, Any]:
        return {"f": self.f.to_json(), "g": self.g.to_json(), "domain": self.domain.to_json()}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self) -> int:
        return hash((self.f, self.g))

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.f)
        return f"({self.f})/({self.g})"

    def __repr__(self) -> str:
        return f"RationalMap({self.domain}, {self})"

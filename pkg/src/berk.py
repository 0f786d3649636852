"""
Points of the Berkovich line for berkram.

A point is given by a base-field center a and a log-radius s (ord units):
it is the point of the closed disk ord(z - a) >= s, and s = +inf gives the
classical point a. This module provides the hyperbolic metric, joins,
the containment order, and evaluation of the multiplicative seminorm of a
polynomial at a point.

Author: Tom Pravetz
License: MIT
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

from .errors import InfiniteDistance
from .poly import Coefficient, Poly, _parse_coefficient, _to_elem, taylor_shift
from .valfield import INF, Domain, ExtVal, FieldElem, ext_from_str, ext_to_str, is_infinite

logger = logging.getLogger(__name__)


class Ordering(Enum):
    """Result of comparing two points by disk containment."""

    EQUAL = "equal"
    ABOVE = ">="
    BELOW = "<="
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class BerkPoint:
    """
    The point of the disk {ord(z - center) >= s}.

    Two points are equal when their disks coincide, i.e. when their radii
    agree and each center lies in the other's disk.

    Attributes:
        center: Base-field center
        s: Log-radius as an exact rational, or INF for a classical point
    """

    center: FieldElem
    s: ExtVal

    def __post_init__(self) -> None:
        if not is_infinite(self.s):
            object.__setattr__(self, "s", Fraction(self.s))
        elif self.s < 0:
            raise ValueError("a disk cannot have log-radius -inf")

    @classmethod
    def gauss(cls, domain: Domain) -> "BerkPoint":
        """The Gauss point of the closed unit disk."""
        return cls(domain.zero(), Fraction(0))

    @classmethod
    def classical(cls, a: FieldElem) -> "BerkPoint":
        return cls(a, INF)

    @classmethod
    def from_json(cls, domain: Domain, data: Dict[str, Any]) -> "BerkPoint":
        return cls(_parse_coefficient(domain, data["center"]), ext_from_str(data["s"]))

    @property
    def domain(self) -> Domain:
        return self.center.domain

    @property
    def is_classical(self) -> bool:
        return is_infinite(self.s)

    @property
    def point_type(self) -> str:
        """Type I for classical points, II for integral radius, III otherwise."""
        if self.is_classical:
            return "I"
        return "II" if self.s.denominator == 1 else "III"

    def contains(self, a: Coefficient) -> bool:
        """True when the classical point a lies in this point's disk."""
        return (_to_elem(self.domain, a) - self.center).ord() >= self.s

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, BerkPoint):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.s == other.s
            and (self.center - other.center).ord() >= self.s
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.s))

    def to_json(self) -> Dict[str, Any]:
        return {"center": self.center.to_json(), "s": ext_to_str(self.s)}

    def __str__(self) -> str:
        if self.is_classical:
            return str(self.center)
        return f"zeta({self.center}, s={ext_to_str(self.s)})"


def join_height(x: BerkPoint, y: BerkPoint) -> ExtVal:
    """Log-radius of the smallest disk containing both points."""
    return min(x.s, y.s, (x.center - y.center).ord())


def join(x: BerkPoint, y: BerkPoint) -> BerkPoint:
    """Least upper bound of x and y in the containment order."""
    return BerkPoint(x.center, join_height(x, y))


def rho(x: BerkPoint, y: BerkPoint) -> Fraction:
    """
    Hyperbolic distance between two non-classical points.

    Raises:
        InfiniteDistance: If either point is classical
    """
    if x.is_classical or y.is_classical:
        raise InfiniteDistance("classical points are infinitely far from everything")
    top = join_height(x, y)
    return (x.s - top) + (y.s - top)


def diam(x: BerkPoint) -> ExtVal:
    """Diameter of x as a log-radius."""
    return x.s


def compare(x: BerkPoint, y: BerkPoint) -> Ordering:
    """Compare two points by containment of their disks."""
    if x == y:
        return Ordering.EQUAL
    if x.s <= y.s and x.contains(y.center):
        return Ordering.ABOVE
    if y.s <= x.s and y.contains(x.center):
        return Ordering.BELOW
    return Ordering.INCOMPARABLE


def seminorm_ord(P: Poly, x: BerkPoint) -> ExtVal:
    """
    Valuation of P at x, i.e. -log |P|(x) in ord units.

    For the disk ord(z - a) >= s this is min_i ord(q_i) + i s, where the q_i
    are the coefficients of P(z + a). At a classical point it is ord P(a).
    """
    if P.is_zero():
        return INF
    shifted = taylor_shift(P, x.center)
    if x.is_classical:
        return shifted.coeff(0).ord()
    return min(c.ord() + i * x.s for i, c in enumerate(shifted.coeffs) if not c.is_zero())


def invert_point(x: BerkPoint, c0: Coefficient) -> BerkPoint:
    """
    Image of x under z -> 1/(z - c0).

    Raises:
        ValueError: If x is the classical point c0, which maps to infinity
    """
    c0 = _to_elem(x.domain, c0)
    offset = (x.center - c0).ord()
    if offset >= x.s:
        if x.is_classical:
            raise ValueError(f"{c0} maps to infinity")
        return BerkPoint(x.domain.zero(), -x.s)
    image_s = x.s if x.is_classical else x.s - 2 * offset
    return BerkPoint((x.center - c0).inverse(), image_s)


@dataclass(frozen=True)
class ImageSegment:
    """
    Piece of the image of s -> zeta(a, s) under z -> 1/(z - c0).

    The image runs over t -> zeta(center, t) for t in [lo, hi]; the original
    parameter is s = shift - t when reflect is set and s = t + shift
    otherwise.
    """

    center: FieldElem
    lo: Fraction
    hi: Fraction
    reflect: bool
    shift: Fraction

    def source(self, t: Fraction) -> Fraction:
        return self.shift - t if self.reflect else t + self.shift


def invert_segment(
    domain: Domain,
    center: Coefficient,
    s0: Fraction,
    s1: Fraction,
    c0: Coefficient,
) -> List[ImageSegment]:
    """
    Image of the segment s -> zeta(center, s), s in [s0, s1], under z -> 1/(z - c0).

    The segment bends at s = ord(center - c0): below it the disks contain c0
    and map onto disks about 0, above it they map onto disks about
    1/(center - c0).
    """
    center = _to_elem(domain, center)
    c0 = _to_elem(domain, c0)
    s0, s1 = Fraction(s0), Fraction(s1)
    v = (center - c0).ord()
    pieces: List[ImageSegment] = []
    if s0 <= v:
        top = s1 if is_infinite(v) else min(s1, v)
        pieces.append(ImageSegment(domain.zero(), -top, -s0, True, Fraction(0)))
    if not is_infinite(v) and v < s1:
        start = max(s0, v)
        pieces.append(ImageSegment((center - c0).inverse(), start - 2 * v, s1 - 2 * v, False, 2 * v))
    return pieces

"""
Newton polygons for berkram.

Lower convex hulls of the points (i, ord c_i) with exact rational slopes,
the multiset of root valuations they encode, and root counts in closed and
open disks.

Author: Tom Pravetz
License: MIT
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .errors import ZeroPolynomial
from .poly import Coefficient, Poly, taylor_shift
from .valfield import INF, NEG_INF, ExtVal, ext_to_str

logger = logging.getLogger(__name__)

CLOSED = "closed"
OPEN = "open"


@dataclass(frozen=True)
class NewtonPolygon:
    """
    Lower convex hull of the valuation points of a nonzero polynomial.

    Attributes:
        vertices: Hull vertices (i, ord c_i), increasing in i
        faces: (slope, horizontal length) per face, slopes strictly increasing
        start_index: Order of vanishing at 0, i.e. the number of roots at +inf
        degree: Degree of the polynomial
    """

    vertices: Tuple[Tuple[int, Fraction], ...]
    faces: Tuple[Tuple[Fraction, int], ...]
    start_index: int
    degree: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "vertices": [[i, ext_to_str(v)] for i, v in self.vertices],
            "faces": [[ext_to_str(mu), length] for mu, length in self.faces],
            "startIndex": self.start_index,
        }


def _cross(o: Tuple[int, Fraction], a: Tuple[int, Fraction], b: Tuple[int, Fraction]) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(P: Poly) -> NewtonPolygon:
    """
    Compute the Newton polygon of P.

    Collinear points are dropped from the vertex list, so each face has a
    distinct slope.

    Raises:
        ZeroPolynomial: If P is zero
    """
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    points = [(i, c.ord()) for i, c in enumerate(P.coeffs) if not c.is_zero()]

    hull: List[Tuple[int, Fraction]] = []
    for point in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)

    faces = tuple(
        (Fraction(b[1] - a[1]) / (b[0] - a[0]), b[0] - a[0]) for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(tuple(hull), faces, points[0][0], P.degree)


def root_valuations(polygon: NewtonPolygon) -> List[Tuple[ExtVal, int]]:
    """
    Root valuations with multiplicities, largest first.

    A face of slope mu and length L contributes L roots of valuation -mu.
    """
    result: List[Tuple[ExtVal, int]] = []
    if polygon.start_index:
        result.append((INF, polygon.start_index))
    result.extend((-mu, length) for mu, length in polygon.faces)
    return result


def max_root_valuation(P: Poly) -> ExtVal:
    """Largest valuation of a root of P; -inf when P is a nonzero constant."""
    valuations = root_valuations(newton_polygon(P))
    return valuations[0][0] if valuations else NEG_INF


def count_roots(P: Poly, center: Coefficient, s: ExtVal, mode: str = CLOSED) -> int:
    """
    Count roots x of P, with multiplicity, in the disk around center.

    Args:
        P: Nonzero polynomial
        center: Center a of the disk
        s: Log-radius; the disk is ord(x - a) >= s (closed) or > s (open)
        mode: "closed" or "open"

    Raises:
        ZeroPolynomial: If P is zero
        ValueError: For an unknown mode
    """
    if mode not in (CLOSED, OPEN):
        raise ValueError(f"Unknown disk mode: {mode}")
    polygon = newton_polygon(taylor_shift(P, center))
    total = 0
    for valuation, count in root_valuations(polygon):
        if valuation > s or (mode == CLOSED and valuation == s):
            total += count
    return total

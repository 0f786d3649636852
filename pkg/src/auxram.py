"""
Auxiliary polynomial and visible ramification for berkram.

For phi = f/g the auxiliary polynomial is

    A(z, w) = [f(z + w) g(w) - f(w) g(z + w)] / z = sum_l A_l(w) z^l,

whose z-coefficients control how far phi stays injective around a point.
This module computes A two independent ways, evaluates the signed visible
ramification t(x) and its positive part tau(x) at points of the Berkovich
line, decides ramification at a point, computes multiplicities, and builds
exact piecewise-affine profiles of t along a ray of disks.

Author: Tom Pravetz
License: MIT
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcd, gf_quo, gf_strip

from .berk import BerkPoint, invert_point, invert_segment, seminorm_ord
from .errors import (
    ConventionUnsatisfiable,
    InfiniteDistance,
    NonIntegerRadius,
    PoleInDisk,
    ProbeNotInBall,
    Undecidable,
)
from .newton import CLOSED, OPEN, count_roots, max_root_valuation, newton_polygon, root_valuations
from .poly import Coefficient, Poly, RationalMap, _to_elem, normalize_map, taylor_shift, wronskian
from .valfield import INF, NEG_INF, ExtVal, FieldElem, ext_to_str, is_infinite

logger = logging.getLogger(__name__)

TFRAK = "tfrak"
TAU = "tau"


class DirectionClass(Enum):
    """Classification of the direction at a point that contains a probe."""

    GENERIC = "Generic"
    EXCEPTIONAL_AUX = "ExceptionalAux"
    EXCEPTIONAL_CRIT = "ExceptionalCrit"


@dataclass(frozen=True)
class AuxPolynomial:
    """
    The auxiliary polynomial of a map, as its z-coefficients A_0 .. A_{d-1}.

    Attributes:
        coeffs: Polynomials in w, index = power of z
    """

    coeffs: Tuple[Poly, ...]

    @property
    def degree(self) -> int:
        """Degree in z."""
        return len(self.coeffs) - 1

    def at(self, y: Coefficient) -> Poly:
        """The polynomial z -> A(z, y)."""
        domain = self.coeffs[0].domain
        return Poly(domain, [A(y) for A in self.coeffs])

    def nonzero_indices(self) -> List[int]:
        return [l for l, A in enumerate(self.coeffs) if l >= 1 and not A.is_zero()]

    def to_json(self) -> List[List[Any]]:
        return [A.to_json() for A in self.coeffs]


def aux_coeffs(phi: RationalMap) -> AuxPolynomial:
    """
    A_0 .. A_{d-1} from the closed binomial formula.

    A_l(w) = sum_{i,j} [C(i, l+1) - C(j, l+1)] a_i b_j w^(i+j-l-1), where the
    integer binomials are mapped into the domain.
    """
    domain = phi.domain
    a = phi.f.coeffs
    b = phi.g.coeffs
    result = []
    for l in range(phi.degree):
        terms: Dict[int, FieldElem] = {}
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                weight = comb(i, l + 1) - comb(j, l + 1)
                if not weight or bj.is_zero():
                    continue
                e = i + j - l - 1
                terms[e] = terms.get(e, domain.zero()) + ai * bj * weight
        top = max(terms, default=-1)
        result.append(Poly(domain, [terms.get(e, domain.zero()) for e in range(top + 1)]))
    return AuxPolynomial(tuple(result))


Bivariate = Dict[Tuple[int, int], FieldElem]


def _bivariate_add(p: Bivariate, q: Bivariate, sign: int = 1) -> Bivariate:
    out = dict(p)
    for key, c in q.items():
        out[key] = out[key] + c * sign if key in out else c * sign
    return {k: c for k, c in out.items() if not c.is_zero()}


def _bivariate_mul(p: Bivariate, q: Bivariate) -> Bivariate:
    out: Bivariate = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out[key] + c1 * c2 if key in out else c1 * c2
    return {k: c for k, c in out.items() if not c.is_zero()}


def _at_z_plus_w(P: Poly) -> Bivariate:
    """P(z + w) as a dict {(power of z, power of w): coefficient}, by Horner."""
    one = P.domain.one()
    z_plus_w = {(1, 0): one, (0, 1): one}
    result: Bivariate = {}
    for c in reversed(P.coeffs):
        result = _bivariate_mul(result, z_plus_w)
        if not c.is_zero():
            result = _bivariate_add(result, {(0, 0): c})
    return result


def _in_w(P: Poly) -> Bivariate:
    return {(0, j): c for j, c in enumerate(P.coeffs) if not c.is_zero()}


def aux_direct(phi: RationalMap) -> AuxPolynomial:
    """
    A_0 .. A_{d-1} by expanding f(z+w)g(w) - f(w)g(z+w) and dividing by z.

    Raises:
        ArithmeticError: If the expansion is not divisible by z
    """
    numerator = _bivariate_add(
        _bivariate_mul(_at_z_plus_w(phi.f), _in_w(phi.g)),
        _bivariate_mul(_in_w(phi.f), _at_z_plus_w(phi.g)),
        sign=-1,
    )
    if any(i == 0 for i, _ in numerator):
        raise ArithmeticError("f(z+w)g(w) - f(w)g(z+w) is not divisible by z")

    domain = phi.domain
    rows: List[Dict[int, FieldElem]] = [dict() for _ in range(phi.degree)]
    for (i, j), c in numerator.items():
        rows[i - 1][j] = c
    return AuxPolynomial(
        tuple(
            Poly(domain, [row.get(j, domain.zero()) for j in range(max(row, default=-1) + 1)])
            for row in rows
        )
    )


def _require_finite(x: BerkPoint) -> None:
    if x.is_classical:
        raise InfiniteDistance(f"{x} is a classical point; visible ramification needs a disk")


def t_frak(phi: RationalMap, x: BerkPoint, aux: Optional[AuxPolynomial] = None) -> ExtVal:
    """
    Signed visible ramification at x.

    Equals -s + max over l >= 1 with A_l != 0 of (v_0 - v_l)/l, where v_l is
    the valuation of A_l at x. Degree one maps have no such l and get -inf.
    """
    _require_finite(x)
    aux = aux or aux_coeffs(phi)
    v0 = seminorm_ord(aux.coeffs[0], x)
    candidates = [(v0 - seminorm_ord(aux.coeffs[l], x)) / l for l in aux.nonzero_indices()]
    if not candidates:
        return NEG_INF
    return -x.s + max(candidates)


def tau(phi: RationalMap, x: BerkPoint, aux: Optional[AuxPolynomial] = None) -> Fraction:
    """Visible ramification at x: max(t_frak, 0)."""
    value = t_frak(phi, x, aux)
    return Fraction(0) if value <= 0 else Fraction(value)


def small_root_bound(phi: RationalMap, x: BerkPoint, aux: Optional[AuxPolynomial] = None) -> ExtVal:
    """
    Largest root valuation that A(z, y) can have for probes y near x.

    This is s + max_l (v_0 - v_l)/l; it is attained for probes in generic
    directions.
    """
    return t_frak(phi, x, aux) + x.s


def min_root_radius(phi: RationalMap, y: Coefficient, aux: Optional[AuxPolynomial] = None) -> ExtVal:
    """
    Largest valuation of a root of z -> A(z, y), i.e. the smallest root radius.

    Returns INF when A(0, y) = 0 and -inf when A(z, y) is a nonzero constant
    (no root, so the root radius is infinite).
    """
    aux = aux or aux_coeffs(phi)
    return max_root_valuation(aux.at(y))


def classify_direction(
    phi: RationalMap,
    x: BerkPoint,
    y: Coefficient,
    aux: Optional[AuxPolynomial] = None,
) -> DirectionClass:
    """
    Classify the direction at x pointing towards the classical point y.

    Raises:
        ProbeNotInBall: If y is not in the closed disk of x
    """
    _require_finite(x)
    y = _to_elem(phi.domain, y)
    if not x.contains(y):
        raise ProbeNotInBall(f"{y} is not in the disk of {x}")
    aux = aux or aux_coeffs(phi)

    if count_roots(aux.coeffs[0], y, x.s, OPEN) > 0:
        return DirectionClass.EXCEPTIONAL_CRIT
    for l in aux.nonzero_indices():
        if count_roots(aux.coeffs[l], y, x.s, OPEN) > 0:
            return DirectionClass.EXCEPTIONAL_AUX
    return DirectionClass.GENERIC


# Multiplicities


def multiplicity_zero_count(phi: RationalMap, a: Coefficient, s: ExtVal) -> int:
    """
    Multiplicity at the disk ord(z - a) >= s by counting solutions of phi = phi(a).

    Raises:
        PoleInDisk: If g has a root in the closed disk
    """
    a = _to_elem(phi.domain, a)
    if count_roots(phi.g, a, s, CLOSED) > 0:
        raise PoleInDisk(f"({phi.g}) vanishes in the disk ord(z - {a}) >= {ext_to_str(s)}")
    target = phi.value_at(a)
    return count_roots(phi.f - phi.g * target, a, s, CLOSED)


def _residues(P: Poly) -> List[int]:
    return [int(c) for c in gf_strip([c.residue() for c in reversed(P.coeffs)])]


def _normalize_pair(F: Poly, G: Poly) -> Tuple[Poly, Poly]:
    """Scale F and G jointly so the smallest coefficient valuation is 0."""
    low = min(c.ord() for c in F.coeffs + G.coeffs if not c.is_zero())
    if low.denominator != 1:
        raise NonIntegerRadius(f"coefficient valuation {low} is not integral")
    scale = F.domain.uniformizer_power(-int(low))
    return F * scale, G * scale


def multiplicity_reduction(phi: RationalMap, x: BerkPoint, max_steps: int = 64) -> int:
    """
    Multiplicity at a type II point from the degree of the reduced map.

    The point is moved to the Gauss point by z -> a + pi^s z. When the
    reduction is constant the target is zoomed by c -> (c - c~)/pi and the
    reduction retried.

    Raises:
        NonIntegerRadius: If s is not an integer
        Undecidable: If no nonconstant reduction appears within max_steps
    """
    if x.is_classical:
        return phi.local_degree(x.center)
    if x.s.denominator != 1:
        raise NonIntegerRadius(f"log-radius {x.s} has no scaling in {phi.domain}")

    p = phi.domain.p
    uniformizer = phi.domain.uniformizer()
    F, G = phi.precompose_affine(x.center, phi.domain.uniformizer_power(int(x.s)))
    for step in range(max_steps):
        F, G = _normalize_pair(F, G)
        f_red, g_red = _residues(F), _residues(G)
        if not g_red:
            logger.debug(f"Reduction step {step}: image is infinity, inverting target")
            F, G = G, F
            continue
        common = gf_gcd(f_red, g_red, p, ZZ)
        f_red = gf_quo(f_red, common, p, ZZ)
        g_red = gf_quo(g_red, common, p, ZZ)
        degree = max(len(f_red), len(g_red)) - 1
        if degree >= 1:
            logger.debug(f"Reduction step {step}: reduced degree {degree}")
            return degree
        constant = int(f_red[0]) * pow(int(g_red[0]), -1, p) % p if f_red else 0
        logger.debug(f"Reduction step {step}: constant reduction {constant}, zooming target")
        F = (F - G * constant) * uniformizer.inverse()
    raise Undecidable(f"reduction at {x} stayed constant for {max_steps} steps")


def multiplicity(phi: RationalMap, x: BerkPoint, max_steps: int = 64) -> int:
    """
    Multiplicity of phi at x, by reduction when possible, else by zero counts.

    Raises:
        Undecidable: If neither method applies with base-field data
    """
    if x.is_classical or x.s.denominator == 1:
        return multiplicity_reduction(phi, x, max_steps)
    try:
        return multiplicity_zero_count(phi, x.center, x.s)
    except PoleInDisk:
        pass
    try:
        return multiplicity_zero_count(normalize_map(phi.g, phi.f), x.center, x.s)
    except PoleInDisk:
        raise Undecidable(f"both zeros and poles of phi meet the disk of {x}")


def is_ramified(phi: RationalMap, x: BerkPoint, max_steps: int = 64) -> bool:
    """
    Decide whether phi fails to be locally injective at x.

    The sign of t is read in coordinates where infinity is critical, so a
    map with infinity unramified is first conjugated by z -> 1/(z - c0) for
    a located critical point c0. There, negative t means unramified and
    positive t means ramified. At t = 0 the point is ramified off the hull
    of critical points; on the hull the multiplicity decides. Without a
    located critical point only the multiplicity is used.

    Raises:
        Undecidable: If the multiplicity is needed and cannot be computed
    """
    from .hull import dist_to_hull, infinity_critical_form

    if x.is_classical:
        return phi.local_degree(x.center) > 1
    try:
        psi, c0 = infinity_critical_form(phi)
    except ConventionUnsatisfiable:
        logger.debug(f"No critical point to move to infinity for {phi}; deciding {x} by multiplicity")
        return multiplicity(phi, x, max_steps) > 1
    if c0 is not None:
        return is_ramified(psi, invert_point(x, c0), max_steps)
    value = t_frak(phi, x)
    if value < 0:
        return False
    if value > 0:
        return True
    if dist_to_hull(phi, x) > 0:
        return True
    return multiplicity(phi, x, max_steps) > 1


# Profiles


@dataclass(frozen=True)
class Piece:
    """The affine function alpha + beta*s on [s0, s1]."""

    s0: Fraction
    s1: Fraction
    alpha: Fraction
    beta: Fraction

    def value_at(self, s: Fraction) -> Fraction:
        return self.alpha + self.beta * s

    def to_json(self) -> Dict[str, str]:
        return {
            "s0": ext_to_str(self.s0),
            "s1": ext_to_str(self.s1),
            "alpha": ext_to_str(self.alpha),
            "beta": ext_to_str(self.beta),
        }


@dataclass(frozen=True)
class Profile:
    """
    Piecewise-affine profile of t (or tau) along s -> zeta(center, s).

    Attributes:
        center: Common center of the disks
        which: "tfrak" or "tau"
        pieces: Contiguous pieces, left to right
    """

    center: FieldElem
    which: str
    pieces: Tuple[Piece, ...]

    @property
    def breakpoints(self) -> List[Fraction]:
        return [self.pieces[0].s0] + [piece.s1 for piece in self.pieces]

    def value_at(self, s: Fraction) -> Fraction:
        for piece in self.pieces:
            if piece.s0 <= s <= piece.s1:
                return piece.value_at(s)
        raise ValueError(f"s = {s} is outside the profile")

    def maximum(self) -> Tuple[Fraction, Fraction]:
        """(max value, argmax); attained at a breakpoint."""
        return max(((self.value_at(s), s) for s in self.breakpoints), key=lambda vs: vs[0])

    def to_json(self) -> List[Dict[str, str]]:
        return [piece.to_json() for piece in self.pieces]


Line = Tuple[Fraction, int]


def _lines(P: Poly, a: FieldElem) -> List[Line]:
    """(ord q_i, i) for the nonzero coefficients of P(z + a)."""
    shifted = taylor_shift(P, a)
    return [(c.ord(), i) for i, c in enumerate(shifted.coeffs) if not c.is_zero()]


def _active(lines: Sequence[Line], s: Fraction) -> Line:
    return min(lines, key=lambda line: line[0] + line[1] * s)


def _crossings(affines: Sequence[Tuple[Fraction, Fraction]], lo: Fraction, hi: Fraction) -> List[Fraction]:
    """Points of (lo, hi) where two of the affine functions alpha + beta*s agree."""
    found = set()
    for (a1, b1), (a2, b2) in combinations(affines, 2):
        if b1 != b2:
            s = Fraction(a2 - a1) / (b1 - b2)
            if lo < s < hi:
                found.add(s)
    return sorted(found)


def profile_segment(
    phi: RationalMap,
    a: Coefficient,
    s0: Fraction,
    s1: Fraction,
    which: str = TFRAK,
    aux: Optional[AuxPolynomial] = None,
) -> Profile:
    """
    Exact profile of t (or tau) at zeta(a, s) for s in [s0, s1].

    Each valuation v_l(s) is the lower envelope of the lines ord(q_i) + i*s
    coming from A_l(z + a); between the crossings of those lines every
    candidate (v_0 - v_l)/l - s is affine, and the profile is their upper
    envelope (together with 0 for tau).

    Raises:
        ValueError: If s0 > s1, or a t profile is requested for a degree one map
    """
    if which not in (TFRAK, TAU):
        raise ValueError(f"Unknown profile kind: {which}")
    a = _to_elem(phi.domain, a)
    s0, s1 = Fraction(s0), Fraction(s1)
    if s0 > s1:
        raise ValueError(f"empty segment [{s0}, {s1}]")
    aux = aux or aux_coeffs(phi)
    indices = aux.nonzero_indices()
    if not indices:
        if which == TFRAK:
            raise ValueError("degree one maps have t = -inf everywhere")
        return Profile(a, which, (Piece(s0, s1, Fraction(0), Fraction(0)),))

    if s0 == s1:
        value = tau(phi, BerkPoint(a, s0), aux) if which == TAU else t_frak(phi, BerkPoint(a, s0), aux)
        return Profile(a, which, (Piece(s0, s1, Fraction(value), Fraction(0)),))

    families = {l: _lines(aux.coeffs[l], a) for l in [0] + indices}
    cuts = {s0, s1}
    for lines in families.values():
        cuts.update(_crossings([(c, Fraction(i)) for c, i in lines], s0, s1))
    cuts = sorted(cuts)

    pieces: List[Piece] = []
    for lo, hi in zip(cuts, cuts[1:]):
        mid = (lo + hi) / 2
        c0, i0 = _active(families[0], mid)
        affines = []
        for l in indices:
            cl, il = _active(families[l], mid)
            affines.append((Fraction(c0 - cl) / l, Fraction(i0 - il) / l - 1))
        if which == TAU:
            affines.append((Fraction(0), Fraction(0)))
        inner = [lo] + _crossings(affines, lo, hi) + [hi]
        for u, v in zip(inner, inner[1:]):
            m = (u + v) / 2
            alpha, beta = max(affines, key=lambda ab: ab[0] + ab[1] * m)
            pieces.append(Piece(u, v, alpha, beta))

    merged: List[Piece] = [pieces[0]]
    for piece in pieces[1:]:
        last = merged[-1]
        if (last.alpha, last.beta) == (piece.alpha, piece.beta):
            merged[-1] = Piece(last.s0, piece.s1, last.alpha, last.beta)
        else:
            merged.append(piece)
    logger.debug(f"Profile of {which} at center {a}: {len(merged)} pieces on [{s0}, {s1}]")
    return Profile(a, which, tuple(merged))


@dataclass(frozen=True)
class LocusCell:
    """
    A run of s values on which ramification has one answer.

    Attributes:
        s0: Left end
        s1: Right end (equal to s0 for a single point)
        ramified: True, False, or None when undecidable
    """

    s0: Fraction
    s1: Fraction
    ramified: Optional[bool]

    def to_json(self) -> Dict[str, Any]:
        return {"s0": ext_to_str(self.s0), "s1": ext_to_str(self.s1), "ramified": self.ramified}


def _finite_root_valuations(P: Poly, a: FieldElem) -> List[Fraction]:
    if P.is_zero() or P.degree < 1:
        return []
    return [v for v, _ in root_valuations(newton_polygon(taylor_shift(P, a))) if not is_infinite(v)]


def _profile_cuts(phi: RationalMap, a: FieldElem, s0: Fraction, s1: Fraction) -> List[Fraction]:
    """Breakpoints and zeros of t along the segment, read where infinity is critical."""
    from .hull import infinity_critical_form

    try:
        psi, c0 = infinity_critical_form(phi)
    except ConventionUnsatisfiable:
        psi, c0 = phi, None
    if c0 is None:
        charts = [(a, s0, s1, lambda t: t)]
    else:
        charts = [(seg.center, seg.lo, seg.hi, seg.source) for seg in invert_segment(phi.domain, a, s0, s1, c0)]

    cuts: List[Fraction] = []
    for center, lo, hi, source in charts:
        profile = profile_segment(psi, center, lo, hi, TFRAK)
        points = list(profile.breakpoints)
        for piece in profile.pieces:
            if piece.beta:
                zero = -piece.alpha / piece.beta
                if piece.s0 < zero < piece.s1:
                    points.append(zero)
        cuts.extend(source(t) for t in points)
    if c0 is not None:
        bend = (a - c0).ord()
        if s0 < bend < s1:
            cuts.append(bend)
    return cuts


def ramified_intervals(
    phi: RationalMap,
    a: Coefficient,
    s0: Fraction,
    s1: Fraction,
    max_steps: int = 64,
) -> List[LocusCell]:
    """
    Split [s0, s1] into runs where zeta(a, s) is ramified or not.

    The answer can only change at breakpoints and zeros of the t profile,
    taken in coordinates where infinity is critical, and at valuations where
    the disk gains a critical point, a pole or a preimage of phi(a). Every
    cut point and every open gap between cuts is decided once.
    """
    a = _to_elem(phi.domain, a)
    s0, s1 = Fraction(s0), Fraction(s1)
    cuts = {s0, s1}
    if phi.degree > 1:
        cuts.update(_profile_cuts(phi, a, s0, s1))
    special = [wronskian(phi), phi.g]
    target = phi.value_at(a)
    if target is not None:
        special.append(phi.f - phi.g * target)
    for P in special:
        cuts.update(v for v in _finite_root_valuations(P, a) if s0 < v < s1)
    ordered = sorted(cuts)

    def decide(s: Fraction) -> Optional[bool]:
        try:
            return is_ramified(phi, BerkPoint(a, s), max_steps)
        except Undecidable as e:
            logger.warning(f"Ramification at zeta({a}, {s}) undecidable: {e}")
            return None

    cells: List[LocusCell] = []
    for i, s in enumerate(ordered):
        cells.append(LocusCell(s, s, decide(s)))
        if i + 1 < len(ordered):
            nxt = ordered[i + 1]
            cells.append(LocusCell(s, nxt, decide((s + nxt) / 2)))

    merged = [cells[0]]
    for cell in cells[1:]:
        if cell.ramified == merged[-1].ramified:
            merged[-1] = LocusCell(merged[-1].s0, cell.s1, cell.ramified)
        else:
            merged.append(cell)
    return merged


def ramified_reach(cells: Sequence[LocusCell], s_ref: Fraction) -> Fraction:
    """Largest |s - s_ref| over ramified cells; 0 when none is ramified."""
    reach = Fraction(0)
    for cell in cells:
        if cell.ramified:
            reach = max(reach, abs(cell.s0 - s_ref), abs(cell.s1 - s_ref))
    return reach

"""
Critical points and their hull for berkram.

Locates the critical points of a map (infinity, base-field roots of the
Wronskian, Hensel-lifted roots, and the valuation data of everything else),
measures the hyperbolic distance from a point to the hull of the critical
set, and checks the uniform tubular neighborhood statements: the
characteristic zero radius, the tame-map radius obtained from tau on a
subgraph of the hull, the local fuzz analysis near a critical point, and the
binomial valuation lemma behind it.

Author: Tom Pravetz
License: MIT
"""

import logging
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import comb, lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import divisors
from sympy.ntheory import multiplicity as p_multiplicity
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_lcm, gf_mul, gf_quo, gf_strip

from .auxram import TAU, aux_coeffs, is_ramified, profile_segment, tau
from .berk import BerkPoint, invert_point, invert_segment
from .errors import (
    CharacteristicP,
    ConventionUnsatisfiable,
    HenselConditionFailed,
    NormalizationViolated,
    Undecidable,
    UnknownMultiplicity,
)
from .newton import CLOSED, OPEN, NewtonPolygon, count_roots, max_root_valuation, newton_polygon, root_valuations
from .poly import Coefficient, Poly, RationalMap, _to_elem, derivative, evaluate, taylor_shift, wronskian
from .valfield import INF, Domain, ExtVal, FieldElem, PAdicApprox, ext_to_str, hensel_lift, integral_primitive

logger = logging.getLogger(__name__)

TAME = "TameAnyChar"
WILD_CHAR_ZERO = "WildCharZero"
WILD_CHAR_P = "WildCharP"


@dataclass(frozen=True)
class CriticalPoint:
    """
    A base-field critical point.

    Attributes:
        point: Location
        weight: Order of vanishing of the Wronskian there
        multiplicity: Local degree of the map there
    """

    point: FieldElem
    weight: int
    multiplicity: int

    def to_json(self) -> Dict[str, Any]:
        return {"point": self.point.to_json(), "weight": self.weight, "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class CriticalSet:
    """
    Everything known about the critical points of a map.

    Attributes:
        has_infinity: Whether infinity is critical
        infinity_multiplicity: Local degree at infinity
        finite_valuations: Root valuations of the Wronskian with counts
        rational_roots: Critical points located exactly in the base field
        hensel_roots: Lifted p-adic approximations of simple residue roots
        complete: Whether the rational roots account for every finite critical point
    """

    has_infinity: bool
    infinity_multiplicity: int
    finite_valuations: Tuple[Tuple[ExtVal, int], ...]
    rational_roots: Tuple[CriticalPoint, ...]
    hensel_roots: Tuple[PAdicApprox, ...] = ()
    complete: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "hasInfinity": self.has_infinity,
            "infinityMultiplicity": self.infinity_multiplicity,
            "finiteValuations": [[ext_to_str(v), n] for v, n in self.finite_valuations],
            "rationalRoots": [c.to_json() for c in self.rational_roots],
            "henselRoots": [h.to_json() for h in self.hensel_roots],
            "complete": self.complete,
        }


# Root location


def _rational_candidates_qp(W: Poly, limit: int) -> List[FieldElem]:
    """Candidates +-u/v from the rational root test on the cleared Wronskian."""
    denominator = reduce(lcm, (c.value.denominator for c in W.coeffs), 1)
    ints = [int(c.value * denominator) for c in W.coeffs]
    low = next(c for c in ints if c)
    high = ints[-1]
    candidates = []
    for u in divisors(abs(low)):
        for v in divisors(abs(high)):
            for sign in (1, -1):
                candidates.append(W.domain.from_fraction(Fraction(sign * u, v)))
                if len(candidates) >= limit:
                    logger.warning(f"Rational root candidate limit {limit} reached for {W}")
                    return list(dict.fromkeys(candidates))
    return list(dict.fromkeys(candidates))


def _gf_divisors(poly: List[int], p: int) -> List[List[int]]:
    """All monic divisors of a nonzero polynomial over GF(p)."""
    _, factors = gf_factor(poly, p, ZZ)
    result: List[List[int]] = []
    for exponents in product(*(range(k + 1) for _, k in factors)):
        divisor = [1]
        for (g, _), e in zip(factors, exponents):
            for _ in range(e):
                divisor = gf_mul(divisor, g, p, ZZ)
        result.append([int(c) for c in divisor])
    return result


def _rational_candidates_fpt(W: Poly, limit: int) -> List[FieldElem]:
    """Candidates c u/v with u | lowest and v | leading coefficient of the cleared Wronskian."""
    p = W.domain.p
    common = reduce(lambda acc, c: gf_lcm(acc, list(c.den), p, ZZ), W.coeffs, [1])
    cleared = [gf_mul(list(c.num), gf_quo(common, list(c.den), p, ZZ), p, ZZ) for c in W.coeffs]
    low = next(gf_strip(c) for c in cleared if gf_strip(c))
    high = gf_strip(cleared[-1])
    candidates = []
    for u in _gf_divisors(low, p):
        for v in _gf_divisors(high, p):
            for unit in range(1, p):
                num = [(unit * c) % p for c in u]
                candidates.append(W.domain.from_gf_lists(list(reversed(num)), list(reversed(v))))
                if len(candidates) >= limit:
                    logger.warning(f"Rational root candidate limit {limit} reached for {W}")
                    return list(dict.fromkeys(candidates))
    return list(dict.fromkeys(candidates))


def rational_roots(W: Poly, limit: int = 4096) -> List[Tuple[FieldElem, int]]:
    """Base-field roots of W with their multiplicities."""
    if W.degree < 1:
        return []
    found: List[Tuple[FieldElem, int]] = []
    zero_order = W.order_at_zero()
    if zero_order:
        found.append((W.domain.zero(), zero_order))
    if W.degree == zero_order:
        return found
    finder = _rational_candidates_qp if W.domain.is_padic else _rational_candidates_fpt
    for candidate in finder(W, limit):
        if candidate.is_zero() or not evaluate(W, candidate).is_zero():
            continue
        found.append((candidate, W.order_at(candidate)))
    logger.debug(f"Located {len(found)} base-field roots of {W}")
    return found


def _hensel_roots(W: Poly, valuations: Sequence[Tuple[ExtVal, int]], precision: int) -> List[PAdicApprox]:
    """Lift residue-simple roots at every integral root valuation."""
    p = W.domain.p
    coeffs = [c.value for c in W.coeffs]
    lifted = []
    for v, _ in valuations:
        if v == INF or v.denominator != 1:
            continue
        q = integral_primitive(coeffs, p, int(v))
        dq = [i * c for i, c in enumerate(q)][1:]
        for u0 in range(1, p):
            if sum(c * u0 ** i for i, c in enumerate(q)) % p:
                continue
            if sum(c * u0 ** i for i, c in enumerate(dq)) % p == 0:
                continue
            try:
                lifted.append(hensel_lift(W, PAdicApprox(int(v), u0, 1, p), precision))
            except HenselConditionFailed as e:
                logger.debug(f"Residue {u0} at valuation {v} did not lift: {e}")
    return lifted


def critical_set(phi: RationalMap, precision: int = 20, candidate_limit: int = 4096) -> CriticalSet:
    """
    Locate the critical points of phi.

    Args:
        phi: The map
        precision: Target precision for Hensel-lifted roots (p-adic domains)
        candidate_limit: Cap on rational-root candidates

    Returns:
        CriticalSet with exact roots, lifted roots and valuation data
    """
    W = wronskian(phi)
    at_infinity = phi.local_degree(None)
    valuations = tuple(root_valuations(newton_polygon(W))) if W.degree >= 1 else ()
    located = tuple(
        CriticalPoint(c, weight, phi.local_degree(c)) for c, weight in rational_roots(W, candidate_limit)
    )
    lifted = tuple(_hensel_roots(W, valuations, precision)) if phi.domain.is_padic else ()
    complete = sum(c.weight for c in located) == max(W.degree, 0)
    logger.info(f"Critical set of {phi}: infinity={at_infinity > 1}, {len(located)} located, complete={complete}")
    return CriticalSet(at_infinity > 1, at_infinity, valuations, located, lifted, complete)


def critical_multiplicities(phi: RationalMap, crit: Optional[CriticalSet] = None) -> List[Tuple[Optional[FieldElem], int]]:
    """(point, multiplicity) for infinity (None) and every located critical point."""
    crit = crit or critical_set(phi)
    result: List[Tuple[Optional[FieldElem], int]] = []
    if crit.has_infinity:
        result.append((None, crit.infinity_multiplicity))
    result.extend((c.point, c.multiplicity) for c in crit.rational_roots)
    return result


def is_tamely_ramified(phi: RationalMap, crit: Optional[CriticalSet] = None) -> bool:
    """
    True when every critical multiplicity is prime to p.

    Raises:
        Undecidable: If some critical point is not located in the base field
    """
    crit = crit or critical_set(phi)
    multiplicities = [m for _, m in critical_multiplicities(phi, crit)]
    if any(m % phi.domain.p == 0 for m in multiplicities):
        return False
    if not crit.complete:
        raise Undecidable(f"not every critical point of {phi} lies in the base field")
    return True


# Distance to the hull


@lru_cache(maxsize=64)
def _default_chart(phi: RationalMap) -> Optional[FieldElem]:
    crit = critical_set(phi)
    return crit.rational_roots[0].point if crit.rational_roots else None


def infinity_critical_form(
    phi: RationalMap,
    crit: Optional[CriticalSet] = None,
) -> Tuple[RationalMap, Optional[FieldElem]]:
    """
    Coordinates in which infinity is critical.

    Returns (phi, None) when infinity already is critical. Otherwise a
    located critical point c0 is moved to infinity and the result is
    (w -> phi(c0 + 1/w), c0); points follow via invert_point(x, c0).

    Raises:
        ConventionUnsatisfiable: If infinity is not critical and no critical
            point lies in the base field
    """
    if phi.local_degree(None) > 1:
        return phi, None
    if crit is not None:
        c0 = crit.rational_roots[0].point if crit.rational_roots else None
    else:
        c0 = _default_chart(phi)
    if c0 is None:
        raise ConventionUnsatisfiable(f"infinity is not critical for {phi} and no critical point is located")
    logger.debug(f"Moving critical point {c0} to infinity")
    return phi.invert_about(c0), c0


def dist_to_hull(phi: RationalMap, x: BerkPoint, crit: Optional[CriticalSet] = None) -> ExtVal:
    """
    Hyperbolic distance from x to the hull of the critical points.

    With infinity critical the hull is the union of the paths from each
    finite critical point to infinity, so the distance from the disk
    ord(z - a) >= s is max(0, s - v), v the largest root valuation of the
    Wronskian shifted to a. Otherwise a base-field critical point is moved
    to infinity first.

    Raises:
        ConventionUnsatisfiable: If infinity is not critical and no critical
            point lies in the base field
    """
    if x.is_classical:
        return Fraction(0) if phi.local_degree(x.center) > 1 else INF
    psi, c0 = infinity_critical_form(phi, crit)
    if c0 is not None:
        return dist_to_hull(psi, invert_point(x, c0))
    W = wronskian(phi)
    if W.degree < 1:
        return INF
    v = max_root_valuation(taylor_shift(W, x.center))
    return max(Fraction(0), x.s - v)


def in_tube(phi: RationalMap, x: BerkPoint, r: Fraction) -> bool:
    """
    Whether x lies within distance r of the hull.

    Raises:
        ValueError: If r is negative
    """
    if r < 0:
        raise ValueError(f"tube radius must be nonnegative, got {r}")
    return dist_to_hull(phi, x) <= r


def theorem_d_radius(p: int, d: int, char0: bool = True) -> Fraction:
    """
    Uniform tube radius containing every ramified point in characteristic 0.

    Raises:
        CharacteristicP: If char0 is False
    """
    if not char0:
        raise CharacteristicP("no uniform radius exists in positive characteristic")
    if p == 0 or p > d:
        return Fraction(0)
    return Fraction(1, p - 1)


@dataclass
class SweepReport:
    """
    Outcome of a tube check over sample points.

    Attributes:
        passed: True when no violation was found and some sample was decided
        radius: Tube radius checked against (None when no radius is claimed)
        checked: Number of samples decided
        violations: Failing samples with the offending values
        skipped: Undecidable samples with the reason
        max_ramified_distance: Largest hull distance seen at a ramified sample
        tame: Tameness of the map (set by check_theorem_e only)
    """

    passed: bool
    radius: Optional[Fraction]
    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    skipped: List[Dict[str, Any]] = field(default_factory=list)
    max_ramified_distance: Fraction = Fraction(0)
    tame: Optional[bool] = None

    @property
    def skipped_by_reason(self) -> Dict[str, int]:
        return dict(Counter(entry["reason"] for entry in self.skipped))

    def to_json(self) -> Dict[str, Any]:
        data = {
            "passed": self.passed,
            "radius": None if self.radius is None else ext_to_str(self.radius),
            "checked": self.checked,
            "violations": self.violations,
            "skipped": self.skipped,
            "skippedByReason": self.skipped_by_reason,
            "maxRamifiedDistance": ext_to_str(self.max_ramified_distance),
        }
        if self.tame is not None:
            data["tame"] = self.tame
        return data


def normalized_tau(phi: RationalMap, x: BerkPoint) -> Fraction:
    """
    tau at x, read in coordinates where infinity is critical.

    Raises:
        ConventionUnsatisfiable: If infinity is not critical and no critical
            point lies in the base field
    """
    psi, c0 = infinity_critical_form(phi)
    return tau(psi, x if c0 is None else invert_point(x, c0))


def _evaluate_sample(phi: RationalMap, x: BerkPoint, max_steps: int) -> Tuple[str, Dict[str, Any]]:
    try:
        ramified = is_ramified(phi, x, max_steps)
        distance = dist_to_hull(phi, x)
        value = normalized_tau(phi, x) if not x.is_classical else Fraction(0)
    except (Undecidable, ConventionUnsatisfiable) as e:
        return "skipped", {"point": x.to_json(), "reason": e.code}
    return "ok", {"point": x, "ramified": ramified, "distance": distance, "tau": value}


def _sweep(
    phi: RationalMap,
    samples: Sequence[BerkPoint],
    radius: Optional[Fraction],
    workers: int,
    max_steps: int,
    check_tau: bool,
) -> SweepReport:
    with ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(lambda x: _evaluate_sample(phi, x, max_steps), samples))

    report = SweepReport(passed=True, radius=radius)
    for status, data in outcomes:
        if status == "skipped":
            report.skipped.append(data)
            continue
        report.checked += 1
        x, distance = data["point"], data["distance"]
        if data["ramified"]:
            report.max_ramified_distance = max(report.max_ramified_distance, distance)
            if radius is not None and distance > radius:
                report.violations.append(
                    {"kind": "ramified_outside_tube", "point": x.to_json(), "distance": ext_to_str(distance)}
                )
        if check_tau and radius is not None and distance == 0 and data["tau"] > radius:
            report.violations.append(
                {"kind": "tau_on_hull", "point": x.to_json(), "tau": ext_to_str(data["tau"])}
            )
    report.passed = not report.violations and (report.checked > 0 or not samples)
    if report.skipped:
        reasons = ", ".join(f"{reason}: {n}" for reason, n in report.skipped_by_reason.items())
        logger.warning(f"Skipped {len(report.skipped)} of {len(samples)} samples ({reasons})")
    if samples and not report.checked:
        logger.warning(f"No sample could be decided for {phi}; the sweep does not pass")
    return report


def check_theorem_d(
    phi: RationalMap,
    samples: Sequence[BerkPoint],
    workers: int = 1,
    max_steps: int = 64,
) -> SweepReport:
    """
    Check that every ramified sample lies in the characteristic 0 tube.

    Also checks tau against the same radius at samples on the hull.

    Raises:
        CharacteristicP: If phi is not over a p-adic domain
    """
    if not phi.domain.is_padic:
        raise CharacteristicP("the uniform tube radius needs characteristic 0")
    radius = theorem_d_radius(phi.domain.p, phi.degree)
    report = _sweep(phi, samples, radius, workers, max_steps, check_tau=True)
    if not report.passed:
        logger.error(f"Tube check failed for {phi}: {len(report.violations)} violations")
    return report


def sample_points(
    domain: Domain,
    count: int,
    rng: random.Random,
    ord_range: Tuple[int, int] = (-3, 3),
    s_range: Tuple[int, int] = (-3, 3),
    max_denominator: int = 3,
) -> List[BerkPoint]:
    """
    Random type II and III points for sweeps.

    Centers are 0 or u * pi^k with a small unit u and ord k in ord_range;
    radii are rationals in s_range with denominator at most max_denominator.
    """
    points = []
    for _ in range(count):
        if rng.random() < 0.2:
            center = domain.zero()
        else:
            unit = rng.randrange(1, domain.p) + domain.p * rng.randrange(0, 3)
            center = domain.from_int(unit) * domain.uniformizer_power(rng.randint(*ord_range))
        q = rng.randint(1, max_denominator)
        s = Fraction(rng.randint(s_range[0] * q, s_range[1] * q), q)
        points.append(BerkPoint(center, s))
    return points


def tau_limit_at_critical(phi: RationalMap, c: Optional[Coefficient]) -> ExtVal:
    """
    Limit of tau when approaching the critical point c (None for infinity).

    Raises:
        UnknownMultiplicity: If c is not a critical point
    """
    if c is not None:
        c = _to_elem(phi.domain, c)
        if not evaluate(wronskian(phi), c).is_zero():
            raise UnknownMultiplicity(f"{c} is not a critical point of {phi}")
    m = phi.local_degree(c)
    if m < 2:
        raise UnknownMultiplicity(f"{'infinity' if c is None else c} is not a critical point of {phi}")
    p = phi.domain.p
    if m % p:
        return Fraction(0)
    if phi.domain.is_padic:
        return Fraction(1, p - 1)
    return INF


def tubular_radius_on_subgraph(
    phi: RationalMap,
    segments: Sequence[Tuple[Coefficient, Fraction, Fraction]],
) -> Fraction:
    """
    Maximum of tau over the segments s -> zeta(center, s), s in [s0, s1].

    tau is read in coordinates where infinity is critical; each segment is
    carried there by invert_segment when a critical point has to be moved.
    """
    psi, c0 = infinity_critical_form(phi)
    aux = aux_coeffs(psi)
    best = Fraction(0)
    for center, s0, s1 in segments:
        if c0 is None:
            pieces = [(center, s0, s1)]
        else:
            pieces = [(seg.center, seg.lo, seg.hi) for seg in invert_segment(phi.domain, center, s0, s1, c0)]
        for piece_center, lo, hi in pieces:
            value, _ = profile_segment(psi, piece_center, lo, hi, TAU, aux).maximum()
            best = max(best, value)
    logger.debug(f"Tube radius on {len(segments)} segments for {phi}: {best}")
    return best


def check_theorem_e(
    phi: RationalMap,
    segments: Sequence[Tuple[Coefficient, Fraction, Fraction]],
    samples: Sequence[BerkPoint],
    workers: int = 1,
    max_steps: int = 64,
) -> SweepReport:
    """
    Check the tame tube statement on sample points.

    For a tame map the radius is the maximum of tau over the given segments
    of the hull; a wild map gets no radius and the report only records how
    far ramified samples reach.

    Raises:
        ConventionUnsatisfiable: If a tame map has infinity unramified and no
            located critical point
    """
    try:
        tame: Optional[bool] = is_tamely_ramified(phi)
    except Undecidable as e:
        logger.warning(f"Tameness undecidable: {e}")
        tame = None
    radius = tubular_radius_on_subgraph(phi, segments) if tame else None
    report = _sweep(phi, samples, radius, workers, max_steps, check_tau=False)
    report.tame = tame
    return report


# Local fuzz near a critical point


@dataclass(frozen=True)
class FuzzReport:
    """
    Local ramified radius around a perturbed center delta near a critical point.

    Attributes:
        case: TameAnyChar, WildCharZero or WildCharP
        m: Multiplicity at 0
        delta_ord: ord(delta)
        r0_ord: Valuation bound delta must exceed (p-adic domains)
        case_limit: Limit of tau at the critical point for this case
        predicted_radius: Radius predicted by the case formula
        computed_radius: Largest s whose closed disk around delta holds two roots of F
        closed_count: Roots of F in the closed disk of that radius
        open_count: Roots of F in the open disk of that radius
        polygon: Newton polygon of F(z) = f(z + delta) - f(delta)
    """

    case: str
    m: int
    delta_ord: Fraction
    r0_ord: Optional[Fraction]
    case_limit: ExtVal
    predicted_radius: ExtVal
    computed_radius: ExtVal
    closed_count: int
    open_count: int
    polygon: NewtonPolygon

    @property
    def agrees(self) -> bool:
        return self.predicted_radius == self.computed_radius

    def to_json(self) -> Dict[str, Any]:
        return {
            "case": self.case,
            "m": self.m,
            "deltaOrd": ext_to_str(self.delta_ord),
            "r0Ord": None if self.r0_ord is None else ext_to_str(self.r0_ord),
            "caseLimit": ext_to_str(self.case_limit),
            "predictedRadius": ext_to_str(self.predicted_radius),
            "computedRadius": ext_to_str(self.computed_radius),
            "closedCount": self.closed_count,
            "openCount": self.open_count,
            "agrees": self.agrees,
            "polygon": self.polygon.to_json(),
        }


def r0_ord(m: int, p: int) -> Fraction:
    """Largest p-adic valuation of C(m, l) for 0 < l < m."""
    return Fraction(max(p_multiplicity(p, comb(m, l)) for l in range(1, m)))


def fuzz_analyze(f: Poly, delta: Coefficient) -> FuzzReport:
    """
    Compare the local ramified radius at delta with the case prediction.

    f must be normalized as z^m (1 + eps(z)) with m >= 2, unit leading term
    at z^m and every other coefficient of positive valuation, and
    0 < ord(delta) < inf; over a p-adic domain also ord(delta) > r0_ord(m, p).

    The computed radius is the second largest root valuation of
    F(z) = f(z + delta) - f(delta). ord and log-radius run in opposite
    directions, so the largest valuation s with two roots in
    ord(z) >= s is the smallest disk about delta holding two roots.

    Raises:
        NormalizationViolated: If f or delta violates the normal form
    """
    delta = _to_elem(f.domain, delta)
    domain = f.domain
    p = domain.p
    if f.is_zero():
        raise NormalizationViolated("the zero series has no normal form")
    m = f.order_at_zero()
    if m < 2:
        raise NormalizationViolated(f"0 is not a critical point of {f}")
    if f.coeff(m) != 1:
        raise NormalizationViolated(f"coefficient of z^{m} must be 1, got {f.coeff(m)}")
    for i in range(m + 1, f.degree + 1):
        if f.coeff(i).ord() <= 0:
            raise NormalizationViolated(f"coefficient of z^{i} must have positive valuation")
    delta_ord = delta.ord()
    if not 0 < delta_ord < INF:
        raise NormalizationViolated(f"delta must satisfy 0 < ord(delta) < inf, got {ext_to_str(delta_ord)}")
    bound = r0_ord(m, p) if domain.is_padic else None
    if bound is not None and delta_ord <= bound:
        raise NormalizationViolated(f"ord(delta) = {delta_ord} must exceed {bound}")

    F = taylor_shift(f, delta) - evaluate(f, delta)
    polygon = newton_polygon(F)
    valuations = [v for v, n in root_valuations(polygon) for _ in range(n)]
    computed = valuations[1] if len(valuations) >= 2 else INF

    if m % p:
        case, limit, predicted = TAME, Fraction(0), delta_ord
    elif domain.is_padic:
        case, limit, predicted = WILD_CHAR_ZERO, Fraction(1, p - 1), delta_ord + Fraction(1, p - 1)
    else:
        case, limit = WILD_CHAR_P, INF
        f_prime = derivative(f)
        if f_prime.is_zero():
            predicted = INF
        else:
            m_prime = f_prime.order_at_zero() + 1
            predicted = ((m_prime - 1) * delta_ord + f.coeff(m_prime).ord()) / (m - 1)

    closed = count_roots(F, 0, computed, CLOSED)
    opened = count_roots(F, 0, computed, OPEN)
    logger.debug(f"Fuzz at delta={delta}: case {case}, predicted {predicted}, computed {computed}")
    return FuzzReport(case, m, delta_ord, bound, limit, predicted, computed, closed, opened, polygon)


def binomial_val_min(m: int, p: int) -> Tuple[Fraction, int]:
    """
    Minimum over 2 <= s <= m of ord_p(C(m, s)/m)/(s - 1), with an argmin.

    Raises:
        ValueError: If m < 2
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if m % p:
        return Fraction(0), m
    return Fraction(-1, p - 1), p


def binomial_val_enumerate(m: int, p: int) -> Tuple[Fraction, List[int]]:
    """Same minimum by direct enumeration, with every argmin."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    values = {
        s: Fraction(p_multiplicity(p, comb(m, s)) - p_multiplicity(p, m), s - 1) for s in range(2, m + 1)
    }
    low = min(values.values())
    return low, [s for s, v in values.items() if v == low]

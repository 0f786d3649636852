"""
Applications for berkram.

Checkers for the non-Archimedean Rolle statement (two zeros in a disk force
a critical point in a slightly larger disk), for disks whose image is the
whole projective line, and for the injectivity radius of a normalized
power series.

Author: Tom Pravetz
License: MIT
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Set

from .errors import CharacteristicP, NormalizationViolated
from .newton import CLOSED, OPEN, count_roots, max_root_valuation
from .poly import Coefficient, Poly, RationalMap, _to_elem, derivative, poly_gcd, taylor_shift, wronskian
from .valfield import INF, ExtVal, FieldElem, ext_to_str

logger = logging.getLogger(__name__)


def gamma_shift(p: int, d: int) -> Fraction:
    """
    Valuation by which a disk is enlarged in the Rolle statements.

    Raises:
        ValueError: If d < 1
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if p == 0 or p > d:
        return Fraction(0)
    return Fraction(1, p - 1)


def robert_injectivity_radius(p: int) -> Fraction:
    """Log-radius 1/(p-1) of the open disk on which normalized series are injective."""
    return Fraction(1, p - 1)


def _require_padic(phi: Any) -> None:
    if not phi.domain.is_padic:
        raise CharacteristicP("this check needs a characteristic 0 domain")


def robert_check(f: Poly) -> Dict[str, Any]:
    """
    Confirm that a normalized series has a single zero in the injectivity disk.

    f must satisfy f(0) = 0, ord f'(0) = 0 and have integral coefficients.

    Raises:
        CharacteristicP: If f is not over a p-adic domain
        NormalizationViolated: If f is not normalized
    """
    _require_padic(f)
    if not f.coeff(0).is_zero() or f.coeff(1).ord() != 0:
        raise NormalizationViolated("need f(0) = 0 and |f'(0)| = 1")
    if any(c.ord() < 0 for c in f.coeffs):
        raise NormalizationViolated("coefficients must be integral")
    radius = robert_injectivity_radius(f.domain.p)
    zeros = count_roots(f, 0, radius, OPEN)
    return {"radius": ext_to_str(radius), "zerosInOpenDisk": zeros, "verdict": zeros == 1}


@dataclass(frozen=True)
class RolleReport:
    """
    Two zeros versus one critical point.

    Attributes:
        zeros_in_disk: Distinct zeros of phi in the closed disk
        shift: Enlargement applied to the disk
        critical_disk_radius_ord: s - shift
        critical_found_at_ord: Largest valuation of a critical point relative to the center
        verdict: True unless two zeros occur with no critical point in the enlarged disk
        probe: True when the shift was forced by the caller
    """

    zeros_in_disk: int
    shift: Fraction
    critical_disk_radius_ord: Fraction
    critical_found_at_ord: ExtVal
    verdict: bool
    probe: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "zerosInDisk": self.zeros_in_disk,
            "shift": ext_to_str(self.shift),
            "criticalDiskRadiusOrd": ext_to_str(self.critical_disk_radius_ord),
            "criticalFoundAtOrd": ext_to_str(self.critical_found_at_ord),
            "verdict": self.verdict,
            "probe": self.probe,
        }


def _critical_reach(phi: RationalMap, a: FieldElem) -> ExtVal:
    """Largest ord(c - a) over finite critical points c."""
    W = wronskian(phi)
    if W.degree < 1:
        return -INF
    return max_root_valuation(taylor_shift(W, a))


def rolle_check(
    phi: RationalMap,
    a: Coefficient,
    s: Fraction,
    shift_override: Optional[Fraction] = None,
) -> RolleReport:
    """
    Check for a critical point near a disk holding two distinct zeros.

    Args:
        phi: The map
        a: Center of the disk
        s: Log-radius of the disk
        shift_override: Enlargement to use instead of the guaranteed one,
            for probing sharpness

    Raises:
        CharacteristicP: If phi is not over a p-adic domain
    """
    _require_padic(phi)
    a = _to_elem(phi.domain, a)
    s = Fraction(s)
    squarefree = phi.f // poly_gcd(phi.f, derivative(phi.f))
    zeros = count_roots(squarefree, a, s, CLOSED)
    probe = shift_override is not None
    shift = Fraction(shift_override) if probe else gamma_shift(phi.domain.p, phi.degree)
    found = _critical_reach(phi, a)
    verdict = zeros < 2 or found >= s - shift
    if not verdict and not probe:
        logger.error(f"Rolle check failed for {phi} on disk ({a}, {s}): {zeros} zeros, critical reach {found}")
    return RolleReport(zeros, shift, s - shift, found, verdict, probe)


@dataclass(frozen=True)
class SurjectivityReport:
    """
    Whether phi maps the closed disk onto the whole projective line.

    Attributes:
        surjective: The answer
        poles_in_disk: Poles of phi in the disk, with multiplicity
        omitted: A position (beta, sigma) of omitted values, if any: every c
            with ord(c - beta) = sigma in a direction away from all other
            cancellation values is missed
        heights_checked: Number of positions examined
    """

    surjective: bool
    poles_in_disk: int
    omitted: Optional[Dict[str, Any]]
    heights_checked: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "surjective": self.surjective,
            "polesInDisk": self.poles_in_disk,
            "omitted": self.omitted,
            "heightsChecked": self.heights_checked,
        }


def _term_valuations(
    F: Poly,
    G: Poly,
    s: Fraction,
    betas: List[Optional[FieldElem]],
    base: FieldElem,
    sigma: ExtVal,
) -> List[ExtVal]:
    """ord(F_i - c G_i) + i s for a generic c with ord(c - base) = sigma."""
    values = []
    for i in range(max(F.degree, G.degree) + 1):
        beta = betas[i]
        if beta is None:
            values.append(F.coeff(i).ord() + i * s)
            continue
        height = min(sigma, (base - beta).ord())
        values.append(G.coeff(i).ord() + height + i * s)
    return values


def _omits(values: List[ExtVal]) -> bool:
    return values[0] != INF and all(values[0] < v for v in values[1:])


def surjectivity_check(phi: RationalMap, a: Coefficient, s: Fraction) -> SurjectivityReport:
    """
    Decide whether phi maps the disk ord(z - a) >= s onto every target value.

    A value c is missed exactly when, for F - cG written around a, the
    constant term strictly dominates every other term at radius s. Each term
    depends on c only through ord(c - beta_i) with beta_i = F_i/G_i, so it is
    enough to test one generic c at every relevant height above every beta.
    """
    a = _to_elem(phi.domain, a)
    s = Fraction(s)
    poles = count_roots(phi.g, a, s, CLOSED)
    if poles == 0:
        return SurjectivityReport(False, 0, {"beta": "inf", "sigma": "inf"}, 0)

    F = taylor_shift(phi.f, a)
    G = taylor_shift(phi.g, a)
    n = max(F.degree, G.degree) + 1
    betas: List[Optional[FieldElem]] = [
        None if G.coeff(i).is_zero() else F.coeff(i) / G.coeff(i) for i in range(n)
    ]
    distinct = list(dict.fromkeys(b for b in betas if b is not None))

    checked = 0
    for base in distinct:
        heights: Set[Fraction] = set()
        for other in distinct:
            if other != base:
                heights.add(Fraction((base - other).ord()))
        constants = [F.coeff(i).ord() + i * s for i in range(n) if betas[i] is None and not F.coeff(i).is_zero()]
        for i in range(n):
            if betas[i] is None:
                continue
            slope_base = G.coeff(i).ord() + i * s
            for c in constants:
                heights.add(Fraction(c - slope_base))
            for k in range(n):
                if betas[k] is not None and k != i:
                    heights.add(Fraction(G.coeff(k).ord() + k * s - slope_base))
                    cap = (base - betas[k]).ord()
                    if cap != INF:
                        heights.add(Fraction(G.coeff(k).ord() + k * s + cap - slope_base))
        ordered = sorted(heights)
        probes: List[ExtVal] = list(ordered)
        probes += [(u + v) / 2 for u, v in zip(ordered, ordered[1:])]
        probes += [ordered[0] - 1, ordered[-1] + 1] if ordered else [Fraction(0)]
        probes.append(INF)
        for sigma in probes:
            checked += 1
            if _omits(_term_valuations(F, G, s, betas, base, sigma)):
                witness = {"beta": base.to_json(), "sigma": ext_to_str(sigma)}
                logger.debug(f"{phi} misses values at {witness} on disk ({a}, {s})")
                return SurjectivityReport(False, poles, witness, checked)
    return SurjectivityReport(True, poles, None, checked)


def app2_check(phi: RationalMap, a: Coefficient, s: Fraction) -> Dict[str, Any]:
    """
    For a disk mapped onto the whole line, confirm a critical point in the enlarged disk.

    Raises:
        CharacteristicP: If phi is not over a p-adic domain
    """
    _require_padic(phi)
    a = _to_elem(phi.domain, a)
    s = Fraction(s)
    surjectivity = surjectivity_check(phi, a, s)
    if not surjectivity.surjective:
        return {"applicable": False, "verdict": True, "surjectivity": surjectivity.to_json()}
    shift = gamma_shift(phi.domain.p, phi.degree)
    found = _critical_reach(phi, a)
    verdict = found >= s - shift
    if not verdict:
        logger.error(f"Surjective disk ({a}, {s}) of {phi} has no critical point within shift {shift}")
    return {
        "applicable": True,
        "verdict": verdict,
        "shift": ext_to_str(shift),
        "criticalFoundAtOrd": ext_to_str(found),
        "surjectivity": surjectivity.to_json(),
    }

"""
Built-in example maps for berkram.

Three families with known ramification behaviour, and runners that
recompute their known values:

* ``ex61``: z^p + z over Q, whose Gauss point is ramified at distance
  exactly 1/(p-1) from the hull of the critical points;
* ``ex62``: z^d + t^-n z^p + z over GF(p)(t), whose ramified points
  wander arbitrarily far from the hull as n grows;
* ``ex63``: (z^(p+1) + p)/z over Q, whose visible ramification has a two
  piece profile along the ray from the Gauss point towards 0.

Author: Tom Pravetz
License: MIT
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, List

from .apps import app2_check, rolle_check, surjectivity_check
from .auxram import (
    TFRAK,
    DirectionClass,
    aux_coeffs,
    classify_direction,
    multiplicity,
    profile_segment,
    ramified_intervals,
    ramified_reach,
    tau,
)
from .berk import BerkPoint
from .hull import dist_to_hull
from .newton import CLOSED, OPEN, count_roots
from .poly import Poly, RationalMap, normalize_map
from .valfield import Domain, ext_to_str

logger = logging.getLogger(__name__)


def ex61(p: int) -> RationalMap:
    """z^p + z over Q with the p-adic valuation."""
    domain = Domain.padic(p)
    return normalize_map(Poly.monomial(domain, p) + Poly.monomial(domain, 1), Poly.constant(domain, 1))


def ex62(n: int, p: int = 3, d: int = 5) -> RationalMap:
    """
    z^d + t^-n z^p + z over GF(p)(t).

    Raises:
        ValueError: If d <= p or p divides d
    """
    if d <= p or d % p == 0:
        raise ValueError(f"need d > p and p not dividing d, got d={d}, p={p}")
    domain = Domain.tadic(p)
    f = Poly.monomial(domain, d) + Poly.monomial(domain, p, domain.t_power(-n)) + Poly.monomial(domain, 1)
    return normalize_map(f, Poly.constant(domain, 1))


def ex63(p: int) -> RationalMap:
    """(z^(p+1) + p)/z over Q with the p-adic valuation."""
    domain = Domain.padic(p)
    return normalize_map(Poly.monomial(domain, p + 1) + p, Poly.monomial(domain, 1))


BUILTIN_MAPS: Dict[str, Callable[..., RationalMap]] = {
    "ex61": lambda p, n=1: ex61(p),
    "ex62": lambda p, n=1: ex62(n, p),
    "ex63": lambda p, n=1: ex63(p),
}


@dataclass
class Check:
    """One known value compared with its recomputation."""

    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "expected": _render(self.expected),
            "actual": _render(self.actual),
            "passed": self.passed,
        }


def _render(value: Any) -> Any:
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (Fraction, float)):
        return ext_to_str(value)
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return str(value)


@dataclass
class ExampleResult:
    """All checks for one example instance."""

    name: str
    parameters: Dict[str, int]
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, expected: Any, actual: Any) -> None:
        check = Check(name, expected, actual)
        if not check.passed:
            logger.error(f"{self.name} {self.parameters}: {name} expected {expected}, got {actual}")
        self.checks.append(check)

    def to_json(self) -> Dict[str, Any]:
        return {
            "example": self.name,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": [check.to_json() for check in self.checks],
        }


def run_example_61(p: int, max_steps: int = 64) -> ExampleResult:
    """Hull distance, multiplicities, zero counts and Rolle sharpness for z^p + z."""
    phi = ex61(p)
    domain = phi.domain
    gauss = BerkPoint.gauss(domain)
    result = ExampleResult("ex61", {"p": p})

    result.add("dist_to_hull(gauss)", Fraction(1, p - 1), dist_to_hull(phi, gauss))
    result.add("multiplicity(gauss)", p, multiplicity(phi, gauss, max_steps))
    for s in (Fraction(1, 2), Fraction(1), Fraction(2)):
        result.add(f"multiplicity(s={s})", 1, multiplicity(phi, BerkPoint(domain.zero(), s), max_steps))
    result.add("zeros in closed unit disk", p, count_roots(phi.f, 0, Fraction(0), CLOSED))
    result.add("zeros in open unit disk", 1, count_roots(phi.f, 0, Fraction(0), OPEN))

    rolle = rolle_check(phi, 0, Fraction(0))
    result.add("rolle verdict", True, rolle.verdict)
    result.add("rolle critical reach", Fraction(-1, p - 1), rolle.critical_found_at_ord)
    probe = rolle_check(phi, 0, Fraction(0), shift_override=Fraction(0))
    result.add("rolle without enlargement", False, probe.verdict)
    return result


def run_example_62(n: int, p: int = 3, d: int = 5) -> ExampleResult:
    """Zeros near 0 and the growing hull distance for z^d + t^-n z^p + z."""
    phi = ex62(n, p, d)
    s = Fraction(n, p - 1)
    point = BerkPoint(phi.domain.zero(), s)
    result = ExampleResult("ex62", {"p": p, "n": n, "d": d})

    result.add("zeros with ord >= s", p, count_roots(phi.f, 0, s, CLOSED))
    result.add("zeros with ord > s", 1, count_roots(phi.f, 0, s, OPEN))
    result.add("multiplicity", p, multiplicity(phi, point))
    result.add("dist_to_hull", s, dist_to_hull(phi, point))
    return result


def run_example_63(p: int, max_steps: int = 64) -> ExampleResult:
    """Auxiliary coefficients, tau, the two piece profile and the ramified reach for (z^(p+1) + p)/z."""
    phi = ex63(p)
    domain = phi.domain
    gauss = BerkPoint.gauss(domain)
    aux = aux_coeffs(phi)
    result = ExampleResult("ex63", {"p": p})

    expected_a0 = (Poly.monomial(domain, p + 1) - 1) * p
    result.add("A_0", expected_a0, aux.coeffs[0])
    for l in range(1, p + 1):
        expected = Poly.monomial(domain, p + 1 - l, comb(p + 1, l + 1))
        result.add(f"A_{l}", expected, aux.coeffs[l])

    result.add("tau(gauss)", Fraction(1, p - 1), tau(phi, gauss, aux))
    break_s = Fraction(1, p + 1)
    profile = profile_segment(phi, 0, Fraction(0), Fraction(1), TFRAK, aux)
    expected_pieces = [
        (Fraction(0), break_s, Fraction(1, p - 1), Fraction(-(p + 1), p - 1)),
        (break_s, Fraction(1), Fraction(1, p), Fraction(-(p + 1), p)),
    ]
    actual_pieces = [(q.s0, q.s1, q.alpha, q.beta) for q in profile.pieces]
    result.add("profile pieces", _render(expected_pieces), _render(actual_pieces))

    cells = ramified_intervals(phi, 0, Fraction(0), Fraction(1), max_steps)
    result.add("max ramified distance", break_s, ramified_reach(cells, Fraction(0)))
    result.add("direction towards 0", DirectionClass.EXCEPTIONAL_AUX.value,
               classify_direction(phi, gauss, p, aux).value)
    result.add("unit disk surjective", True, surjectivity_check(phi, 0, Fraction(0)).surjective)
    result.add("critical point in enlarged disk", True, app2_check(phi, 0, Fraction(0))["verdict"])
    return result


EXAMPLE_NAMES = {"6.1": "ex61", "6.2": "ex62", "6.3": "ex63"}


def run_example(name: str, p: int, n: int = 1, max_steps: int = 64) -> ExampleResult:
    """
    Run an example by its builtin map name ("ex61") or number ("6.1").

    Raises:
        ValueError: For an unknown example
    """
    key = EXAMPLE_NAMES.get(name, name)
    if key == "ex61":
        return run_example_61(p, max_steps)
    if key == "ex62":
        return run_example_62(n, p)
    if key == "ex63":
        return run_example_63(p, max_steps)
    raise ValueError(f"Unknown example: {name}")

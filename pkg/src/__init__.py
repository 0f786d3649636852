"""
berkram - Ramification on the Berkovich projective line.

Exact computation of ramification invariants of rational maps over Q with a
p-adic valuation and over GF(p)(t): the auxiliary polynomial, visible
ramification, multiplicities, distance to the hull of the critical points,
and checkers for the tubular neighborhood and Rolle-type statements.

Author: Tom Pravetz
License: MIT
Version: 1.0.0
"""

__version__ = "1.0.0"
__author__ = "Tom Pravetz"
__license__ = "MIT"

# Main components
from .config import Config, setup_logging
from .errors import BerkramError
from .valfield import INF, Domain, FieldElem
from .poly import Poly, RationalMap, normalize_map, wronskian
from .newton import count_roots, newton_polygon
from .berk import BerkPoint, rho
from .auxram import aux_coeffs, is_ramified, multiplicity, profile_segment, t_frak, tau
from .hull import critical_set, dist_to_hull, fuzz_analyze
from .apps import rolle_check, surjectivity_check
from .dispatcher import CommandDispatcher
from .cli_interface import CLIInterface

__all__ = [
    "Config",
    "setup_logging",
    "BerkramError",
    "INF",
    "Domain",
    "FieldElem",
    "Poly",
    "RationalMap",
    "normalize_map",
    "wronskian",
    "count_roots",
    "newton_polygon",
    "BerkPoint",
    "rho",
    "aux_coeffs",
    "is_ramified",
    "multiplicity",
    "profile_segment",
    "t_frak",
    "tau",
    "critical_set",
    "dist_to_hull",
    "fuzz_analyze",
    "rolle_check",
    "surjectivity_check",
    "CommandDispatcher",
    "CLIInterface",
]

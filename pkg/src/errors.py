"""
Exceptions for berkram.

Every failure the library can report has its own class here. Each class
derives from BerkramError and from the builtin exception closest in meaning,
and carries a stable ``code`` used in JSON error objects written by the CLI.

Author: Tom Pravetz
License: MIT
"""

from typing import Any, Dict


class BerkramError(Exception):
    """Base class for all library errors."""

    code = "berkram_error"

    def to_json(self) -> Dict[str, Any]:
        """Return the JSON error object for this exception."""
        return {"code": self.code, "message": str(self)}


class DomainMismatch(BerkramError, ValueError):
    """Operands belong to different coefficient domains."""

    code = "domain_mismatch"


class DivisionByZero(BerkramError, ZeroDivisionError):
    """Division by the zero element of a domain."""

    code = "division_by_zero"


class HenselConditionFailed(BerkramError, ArithmeticError):
    """The starting approximation does not satisfy ord P(x0) > 2 ord P'(x0)."""

    code = "hensel_condition_failed"


class ZeroPolynomial(BerkramError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""

    code = "zero_polynomial"


class ConstantMap(BerkramError, ValueError):
    """f/g is constant after removing common factors."""

    code = "constant_map"


class InseparableMap(BerkramError, ValueError):
    """The Wronskian of f/g vanishes identically."""

    code = "inseparable_map"


class InfiniteDistance(BerkramError, ValueError):
    """A type I point has no finite hyperbolic distance to anything."""

    code = "infinite_distance"


class PoleInDisk(BerkramError, ValueError):
    """The closed disk contains a pole, so zero counting does not apply."""

    code = "pole_in_disk"


class NonIntegerRadius(BerkramError, ValueError):
    """The log-radius is not an integer, so no base-field scaling exists."""

    code = "non_integer_radius"


class Undecidable(BerkramError, ArithmeticError):
    """The answer needs data outside the base field."""

    code = "undecidable"


class ProbeNotInBall(BerkramError, ValueError):
    """A direction probe lies outside the disk of the base point."""

    code = "probe_not_in_ball"


class ConventionUnsatisfiable(BerkramError, ArithmeticError):
    """Infinity is not critical and no base-field critical point can be moved there."""

    code = "convention_unsatisfiable"


class CharacteristicP(BerkramError, ValueError):
    """The statement only holds over fields of characteristic zero."""

    code = "characteristic_p"


class UnknownMultiplicity(BerkramError, ValueError):
    """The point is not a located critical point."""

    code = "unknown_multiplicity"


class NormalizationViolated(BerkramError, ValueError):
    """A series is not in the normalized form z^m (1 + eps(z))."""

    code = "normalization_violated"


class SchemaError(BerkramError, ValueError):
    """A job description does not match the input schema."""

    code = "schema_error"

"""
polycalc Errors
===============

Domain errors raised by the calculus. All of them are ValueErrors. The CLI maps
PolyhedralError to exit code 2 and any other ValueError to exit code 1.
"""


class PolyhedralError(ValueError):
    """Root of all domain errors."""
    kind = "domain"


class DimensionMismatchError(PolyhedralError):
    kind = "dimension_mismatch"


class EmptySetError(PolyhedralError):
    """An operation needs a nonempty polyhedron."""
    kind = "empty_set"


class ImproperObjectiveError(PolyhedralError):
    kind = "improper_objective"


class NotAnEpigraphError(PolyhedralError):
    """The HRep given as an epigraph is not closed upward in t."""
    kind = "not_an_epigraph"


class OracleSizeGuardError(PolyhedralError):
    kind = "oracle_size_guard"


def check_dim(what: str, got: int, expected: int):
    if got != expected:
        raise DimensionMismatchError(f"{what}: dimension {got}, expected {expected}")

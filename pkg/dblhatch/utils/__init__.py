from dblhatch.utils.search import Budget, Constraint, solve
from dblhatch.utils.structure import (
    Operation,
    Presentation,
    check_map,
    enumerate_maps,
    find_isomorphism,
)
from dblhatch.utils.types import (
    CheckReport,
    Counterexample,
    FreenessReport,
    PropertyReport,
    ValidationReport,
    Violation,
)

__all__ = [
    "Budget",
    "Constraint",
    "solve",
    "Operation",
    "Presentation",
    "check_map",
    "enumerate_maps",
    "find_isomorphism",
    "CheckReport",
    "Counterexample",
    "FreenessReport",
    "PropertyReport",
    "ValidationReport",
    "Violation",
]

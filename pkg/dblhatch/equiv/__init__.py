from dblhatch.equiv.equivalence import (
    AdjointEquivalenceWitness,
    find_adjoint_equivalence,
    find_horizontal_equivalence,
    horizontal_equivalences,
    horizontal_inverse,
    identity_equivalence,
    is_horizontal_equivalence,
    is_horizontally_invertible,
    is_vertically_invertible,
    promote_to_adjoint,
    reverse_equivalence,
    triangle_identities,
    verify_adjoint,
    verify_equivalence,
    vertical_inverse,
)
from dblhatch.equiv.weak_inverse import (
    WeakInverseWitness,
    check_globular_invertibility,
    find_weak_horizontal_inverse,
    is_weakly_horizontally_invertible,
    unique_weak_inverse,
    verify_weak_inverse,
)
from dblhatch.fincat.twocat import EquivalenceWitness

__all__ = [
    "AdjointEquivalenceWitness",
    "EquivalenceWitness",
    "find_adjoint_equivalence",
    "find_horizontal_equivalence",
    "horizontal_equivalences",
    "horizontal_inverse",
    "identity_equivalence",
    "is_horizontal_equivalence",
    "is_horizontally_invertible",
    "is_vertically_invertible",
    "promote_to_adjoint",
    "reverse_equivalence",
    "triangle_identities",
    "verify_adjoint",
    "verify_equivalence",
    "vertical_inverse",
    "WeakInverseWitness",
    "check_globular_invertibility",
    "find_weak_horizontal_inverse",
    "is_weakly_horizontally_invertible",
    "unique_weak_inverse",
    "verify_weak_inverse",
]

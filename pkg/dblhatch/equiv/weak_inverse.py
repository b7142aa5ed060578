"""
Weakly horizontally invertible squares.

A square ``α`` with boundary ``(a, b, u, v)`` is weakly horizontally
invertible if there are equivalence data ``(a, a′, η_a, ε_a)`` and
``(b, b′, η_b, ε_b)`` and a square ``β`` with boundary ``(a′, b′, v, u)`` such
that

- ``(β∘α) • η_a = η_b • id_u``
- ``id_v • ε_a = ε_b • (α∘β)``
- ``η_b⁻¹ • (β∘α) = id_u • η_a⁻¹``
- ``(α∘β) • ε_a⁻¹ = ε_b⁻¹ • id_v``
"""

import logging

from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.equiv.equivalence import horizontal_equivalences, verify_equivalence
from dblhatch.errors import NonUnique, NotInvertible
from dblhatch.fincat.twocat import EquivalenceWitness
from dblhatch.utils.types import PropertyReport, Violation


class WeakInverseWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    square: str
    inverse: str
    top: EquivalenceWitness
    bottom: EquivalenceWitness


def pasting_failures(
    A: DoubleCategory, alpha: str, beta: str, top: EquivalenceWitness, bottom: EquivalenceWitness
) -> list[str]:
    """Names of the weak-inverse equalities that fail for ``β``."""
    u, v = A.left(alpha), A.right(alpha)
    eta_a, eps_a, eta_b, eps_b = top.unit, top.counit, bottom.unit, bottom.counit
    beta_alpha = A.hcomp_sq(beta, alpha)
    alpha_beta = A.hcomp_sq(alpha, beta)
    checks = {
        "unit": (A.vcomp_sq(beta_alpha, eta_a), A.vcomp_sq(eta_b, A.id_square(u))),
        "counit": (A.vcomp_sq(A.id_square(v), eps_a), A.vcomp_sq(eps_b, alpha_beta)),
        "inverse unit": (
            A.vcomp_sq(A.vertical_inverse(eta_b), beta_alpha),
            A.vcomp_sq(A.id_square(u), A.vertical_inverse(eta_a)),
        ),
        "inverse counit": (
            A.vcomp_sq(alpha_beta, A.vertical_inverse(eps_a)),
            A.vcomp_sq(A.vertical_inverse(eps_b), A.id_square(v)),
        ),
    }
    return [name for name, (lhs, rhs) in checks.items() if lhs is None or lhs != rhs]


def _candidates(A: DoubleCategory, alpha: str, top: EquivalenceWitness, bottom: EquivalenceWitness) -> list[str]:
    return [
        beta
        for beta in A.squares_with(top.backward, bottom.backward, A.right(alpha), A.left(alpha))
        if not pasting_failures(A, alpha, beta, top, bottom)
    ]


def verify_weak_inverse(A: DoubleCategory, w: WeakInverseWitness) -> bool:
    top, bottom, left, right = A.squares[w.square]
    if w.top.forward != top or w.bottom.forward != bottom:
        return False
    if not (verify_equivalence(A, w.top) and verify_equivalence(A, w.bottom)):
        return False
    if A.squares.get(w.inverse) != (w.top.backward, w.bottom.backward, right, left):
        return False
    return not pasting_failures(A, w.square, w.inverse, w.top, w.bottom)


def find_weak_horizontal_inverse(A: DoubleCategory, alpha: str) -> WeakInverseWitness | None:
    """Equivalence data on the top and bottom first, then the inverse square;
    the first witness in deterministic order."""
    for top in horizontal_equivalences(A, A.top(alpha)):
        for bottom in horizontal_equivalences(A, A.bottom(alpha)):
            found = _candidates(A, alpha, top, bottom)
            if found:
                return WeakInverseWitness(square=alpha, inverse=found[0], top=top, bottom=bottom)
    return None


def is_weakly_horizontally_invertible(A: DoubleCategory, alpha: str) -> bool:
    """Memoized on ``A``, so repeated scans share one search per square."""
    known = A._cache.setdefault("weakly_invertible", {})
    if alpha not in known:
        known[alpha] = find_weak_horizontal_inverse(A, alpha) is not None
    return known[alpha]


def unique_weak_inverse(
    A: DoubleCategory, alpha: str, top: EquivalenceWitness, bottom: EquivalenceWitness
) -> str:
    """The weak inverse of ``alpha`` compatible with the given adjoint data.

    Raises:
        NotInvertible: if no square is compatible.
        NonUnique: if more than one square is compatible.
    """
    found = _candidates(A, alpha, top, bottom)
    if not found:
        raise NotInvertible(f"{alpha} has no weak inverse for the given equivalence data")
    if len(found) > 1:
        logging.warning(f"{alpha} has {len(found)} weak inverses for fixed adjoint data")
        raise NonUnique(f"{alpha} has several weak inverses", found)
    return found[0]


def check_globular_invertibility(A: DoubleCategory) -> PropertyReport:
    """For globular squares between horizontal equivalences, weak horizontal
    invertibility and vertical invertibility must agree."""
    discrepancies = []
    checked = 0
    for alpha in sorted(A.squares):
        if not A.is_globular(alpha):
            continue
        top, bottom = A.top(alpha), A.bottom(alpha)
        if next(horizontal_equivalences(A, top), None) is None:
            continue
        if next(horizontal_equivalences(A, bottom), None) is None:
            continue
        checked += 1
        weak = is_weakly_horizontally_invertible(A, alpha)
        vertical = A.vertical_inverse(alpha) is not None
        if weak != vertical:
            discrepancies.append(
                Violation(
                    law="weakly horizontally invertible" if weak else "vertically invertible",
                    cells=[alpha],
                )
            )
    return PropertyReport(subject=A.name, checked=checked, discrepancies=discrepancies)

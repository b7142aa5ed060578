"""
Horizontal pseudo natural equivalences: pseudo transformations whose
components are horizontal equivalences and whose vertical-morphism squares
are weakly horizontally invertible. Two parallel double functors are right
homotopic iff such an adjoint equivalence exists between them.
"""

import logging

from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.dblcore.transformation import (
    HorizontalTransformation,
    enumerate_horizontal,
    identity_horizontal,
    verify_horizontal,
)
from dblhatch.equiv.equivalence import (
    AdjointEquivalenceWitness,
    find_adjoint_equivalence,
    identity_equivalence,
    verify_equivalence,
)
from dblhatch.equiv.weak_inverse import WeakInverseWitness, unique_weak_inverse, verify_weak_inverse
from dblhatch.errors import NotInvertible
from dblhatch.homotopy.pseudo_functor import same_pseudo_functor
from dblhatch.utils.search import Budget
from dblhatch.utils.types import ValidationReport, Violation


class PseudoEquivalence(BaseModel):
    model_config = ConfigDict(frozen=True)

    transformation: HorizontalTransformation
    objects: dict[str, AdjointEquivalenceWitness]
    vmors: dict[str, WeakInverseWitness]


def identity_pseudo_equivalence(F: DoubleFunctor) -> PseudoEquivalence:
    A, B = F.source, F.target
    objects = {x: identity_equivalence(B, F.objects[x]) for x in A.objects}
    vmors = {}
    for u, (x, y) in A.vmors.items():
        square = B.id_square(F.vmors[u])
        vmors[u] = WeakInverseWitness(square=square, inverse=square, top=objects[x], bottom=objects[y])
    return PseudoEquivalence(
        transformation=identity_horizontal(F, "pseudo"), objects=objects, vmors=vmors
    )


def build_pseudo_equivalence(t: HorizontalTransformation) -> PseudoEquivalence | None:
    """Adjoint data on every component and the weak inverse of every
    vertical-morphism square it determines; None if some component is not
    an equivalence or some square is not weakly invertible."""
    A, B = t.source.source, t.source.target
    objects = {}
    for x in sorted(A.objects):
        w = find_adjoint_equivalence(B, t.components[x])
        if w is None:
            return None
        objects[x] = w
    vmors = {}
    for u in sorted(A.vmors):
        x, y = A.vmors[u]
        square = t.vmor_squares[u]
        try:
            inverse = unique_weak_inverse(B, square, objects[x], objects[y])
        except NotInvertible:
            return None
        vmors[u] = WeakInverseWitness(square=square, inverse=inverse, top=objects[x], bottom=objects[y])
    return PseudoEquivalence(transformation=t, objects=objects, vmors=vmors)


def verify_pseudo_equivalence(e: PseudoEquivalence) -> ValidationReport:
    t = e.transformation
    report = verify_horizontal(t)
    A, B = t.source.source, t.source.target
    violations = list(report.violations)
    for x in sorted(A.objects):
        w = e.objects.get(x)
        if w is None or w.forward != t.components.get(x) or not verify_equivalence(B, w):
            violations.append(Violation(law="component is a horizontal equivalence", cells=[x]))
    for u in sorted(A.vmors):
        w = e.vmors.get(u)
        if w is None or w.square != t.vmor_squares.get(u) or not verify_weak_inverse(B, w):
            violations.append(Violation(law="square is weakly horizontally invertible", cells=[u]))
    return ValidationReport(subject=report.subject, violations=violations)


def find_pseudo_equivalence(
    F: DoubleFunctor, G: DoubleFunctor, budget: Budget | None = None
) -> PseudoEquivalence | None:
    """The first horizontal pseudo natural adjoint equivalence ``F ≃ G``.

    Raises:
        BudgetExceeded: if the search visits more nodes than allowed.
    """
    if same_pseudo_functor(F, G):
        return identity_pseudo_equivalence(F)
    for t in enumerate_horizontal(F, G, "pseudo", budget):
        found = build_pseudo_equivalence(t)
        if found is not None:
            return found
    logging.debug(f"No pseudo equivalence {F.name} => {G.name}")
    return None


def are_right_homotopic(F: DoubleFunctor, G: DoubleFunctor, budget: Budget | None = None) -> bool:
    return find_pseudo_equivalence(F, G, budget) is not None

"""
Horizontal equivalences in a double category and their promotion to adjoint
equivalences.

Equivalence data ``(a, a′, η, ε)`` for ``a: X -> Y`` consists of
``a′: Y -> X`` and vertically invertible globular squares
``η: id_X ⇒ a′∘a`` and ``ε: a∘a′ ⇒ id_Y``.
"""

import logging
from collections.abc import Iterator

from dblhatch.construct.embed import underlying_horizontal
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.ops import transpose
from dblhatch.errors import InternalInconsistency
from dblhatch.fincat.twocat import EquivalenceWitness


class AdjointEquivalenceWitness(EquivalenceWitness):
    left_triangle: bool = True
    right_triangle: bool = True


def vertical_inverse(A: DoubleCategory, alpha: str) -> str | None:
    return A.vertical_inverse(alpha)


def is_vertically_invertible(A: DoubleCategory, alpha: str) -> bool:
    return A.vertical_inverse(alpha) is not None


def horizontal_inverse(A: DoubleCategory, alpha: str) -> str | None:
    """The two-sided inverse of ``alpha`` for horizontal composition, if any."""
    return transpose(A).vertical_inverse(alpha)


def is_horizontally_invertible(A: DoubleCategory, alpha: str) -> bool:
    return horizontal_inverse(A, alpha) is not None


def _invertible_globular(A: DoubleCategory, top: str | None, bottom: str | None) -> list[str]:
    if top is None or bottom is None:
        return []
    return [s for s in A.globular_squares(top, bottom) if A.vertical_inverse(s) is not None]


def horizontal_equivalences(A: DoubleCategory, a: str) -> Iterator[EquivalenceWitness]:
    """All equivalence data on ``a`` in deterministic order."""
    x, y = A.hmors[a]
    for back in A.hom_h(y, x):
        for eta in _invertible_globular(A, A.hid(x), A.hcomp(back, a)):
            for epsilon in _invertible_globular(A, A.hcomp(a, back), A.hid(y)):
                yield EquivalenceWitness(forward=a, backward=back, unit=eta, counit=epsilon)


def find_horizontal_equivalence(A: DoubleCategory, a: str) -> EquivalenceWitness | None:
    """The first equivalence data on ``a``, or None if ``a`` is not a horizontal equivalence."""
    return next(horizontal_equivalences(A, a), None)


def is_horizontal_equivalence(A: DoubleCategory, a: str) -> bool:
    return find_horizontal_equivalence(A, a) is not None


def identity_equivalence(A: DoubleCategory, x: str) -> AdjointEquivalenceWitness:
    identity = A.hid(x)
    return AdjointEquivalenceWitness(
        forward=identity, backward=identity, unit=A.box(x), counit=A.box(x)
    )


def verify_equivalence(A: DoubleCategory, w: EquivalenceWitness) -> bool:
    """Boundaries and invertibility of ``w``, re-checked from the tables."""
    if w.forward not in A.hmors or w.backward not in A.hmors:
        return False
    x, y = A.hmors[w.forward]
    if A.hmors[w.backward] != (y, x):
        return False
    return w.unit in _invertible_globular(
        A, A.hid(x), A.hcomp(w.backward, w.forward)
    ) and w.counit in _invertible_globular(A, A.hcomp(w.forward, w.backward), A.hid(y))


def triangle_identities(A: DoubleCategory, w: EquivalenceWitness) -> tuple[bool, bool]:
    """Both triangle identities, evaluated as whiskerings in 𝐇A."""
    H = underlying_horizontal(A)
    a, back = w.forward, w.backward
    left = H.vcomp(H.whisker_right(w.counit, a), H.whisker_left(a, w.unit))
    right = H.vcomp(H.whisker_left(back, w.counit), H.whisker_right(w.unit, back))
    return left == H.identity_cell(a), right == H.identity_cell(back)


def verify_adjoint(A: DoubleCategory, w: EquivalenceWitness) -> bool:
    return verify_equivalence(A, w) and all(triangle_identities(A, w))


def promote_to_adjoint(A: DoubleCategory, w: EquivalenceWitness) -> AdjointEquivalenceWitness:
    """Keep ``η`` and replace ``ε`` by ``ε • (a η⁻¹ a′) • (ε⁻¹ a a′)``.

    Data that already satisfies both triangle identities is returned unchanged.

    Raises:
        InternalInconsistency: if the promoted data fails the triangle identities.
    """
    left, right = triangle_identities(A, w)
    if left and right:
        return AdjointEquivalenceWitness(**w.model_dump())

    a, back = w.forward, w.backward
    eta_inv = A.vertical_inverse(w.unit)
    epsilon_inv = A.vertical_inverse(w.counit)
    middle = A.hcomp_sq(A.e_square(a), A.hcomp_sq(eta_inv, A.e_square(back)))
    lower = A.hcomp_sq(epsilon_inv, A.e_square(A.hcomp(a, back)))
    counit = A.vcomp_sq(w.counit, A.vcomp_sq(middle, lower))
    if counit is None:
        raise InternalInconsistency(f"promoted counit of {a} is undefined")

    promoted = EquivalenceWitness(forward=a, backward=back, unit=w.unit, counit=counit)
    left, right = triangle_identities(A, promoted)
    if not (left and right and verify_equivalence(A, promoted)):
        raise InternalInconsistency(f"promoted equivalence data on {a} fails a triangle identity")
    logging.debug(f"Promoted equivalence on {a}: counit {w.counit} -> {counit}")
    return AdjointEquivalenceWitness(**promoted.model_dump())


def find_adjoint_equivalence(A: DoubleCategory, a: str) -> AdjointEquivalenceWitness | None:
    """Adjoint equivalence data on ``a``; identities get the identity data."""
    if A.is_hidentity(a):
        return identity_equivalence(A, A.hsrc(a))
    w = find_horizontal_equivalence(A, a)
    return promote_to_adjoint(A, w) if w is not None else None


def reverse_equivalence(A: DoubleCategory, w: EquivalenceWitness) -> AdjointEquivalenceWitness:
    """``(a′, a, ε⁻¹, η⁻¹)``; adjoint whenever ``w`` is."""
    return AdjointEquivalenceWitness(
        forward=w.backward,
        backward=w.forward,
        unit=A.vertical_inverse(w.counit),
        counit=A.vertical_inverse(w.unit),
    )

"""
The 2-category 𝒱A of vertical morphisms of a double category, its left
adjoint 𝕃 = ℍ(−) × 𝕍𝟚, and the counit 𝕃𝒱A -> A.

𝒱A has the vertical morphisms of ``A`` as objects and squares as morphisms
(from their left to their right side, composed horizontally). A 2-cell
``α ⇒ β`` between squares ``u -> v`` is a pair of globular squares
``σ0: top α ⇒ top β`` and ``σ1: bottom α ⇒ bottom β`` with
``β • σ0 = σ1 • α``; its id is ``σ0|σ1:α>β``.
"""

import logging

from dblhatch.construct.embed import horizontal_embed
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.dblcore.ops import pair_id, product
from dblhatch.dblcore.shapes import vertical_arrow
from dblhatch.fincat.twocat import TwoCategory, TwoFunctor


def cell_id(sigma0: str, sigma1: str, alpha: str, beta: str) -> str:
    return f"{sigma0}|{sigma1}:{alpha}>{beta}"


def vertical_morphism_cells(A: DoubleCategory) -> dict[str, tuple[str, str, str, str]]:
    """Every 2-cell of 𝒱A as ``id -> (α, β, σ0, σ1)``."""
    if "vertical_morphism_cells" not in A._cache:
        cells = {}
        for alpha in sorted(A.squares):
            _, _, left, right = A.squares[alpha]
            for beta in A.squares_with_left(left):
                if A.right(beta) != right:
                    continue
                for sigma0 in A.globular_squares(A.top(alpha), A.top(beta)):
                    for sigma1 in A.globular_squares(A.bottom(alpha), A.bottom(beta)):
                        if A.vcomp_sq(beta, sigma0) == A.vcomp_sq(sigma1, alpha):
                            cells[cell_id(sigma0, sigma1, alpha, beta)] = (alpha, beta, sigma0, sigma1)
        A._cache["vertical_morphism_cells"] = cells
    return A._cache["vertical_morphism_cells"]


def vertical_morphism_2cat(A: DoubleCategory) -> TwoCategory:
    """𝒱A, built directly from the squares of ``A``."""
    cells = vertical_morphism_cells(A)
    vertical, horizontal = {}, {}
    for tau, (beta, gamma, tau0, tau1) in cells.items():
        for sigma, (alpha, beta2, sigma0, sigma1) in cells.items():
            if beta2 == beta:
                vertical[(tau, sigma)] = cell_id(
                    A.vcomp_sq(tau0, sigma0), A.vcomp_sq(tau1, sigma1), alpha, gamma
                )
            if A.left(beta) == A.right(alpha):
                horizontal[(tau, sigma)] = cell_id(
                    A.hcomp_sq(tau0, sigma0),
                    A.hcomp_sq(tau1, sigma1),
                    A.hcomp_sq(beta, alpha),
                    A.hcomp_sq(gamma, beta2),
                )
    logging.debug(f"V({A.name}): {len(A.vmors)} objects, {len(A.squares)} morphisms, {len(cells)} 2-cells")
    return TwoCategory(
        name=f"V({A.name})",
        objects=sorted(A.vmors),
        morphisms={alpha: (A.left(alpha), A.right(alpha)) for alpha in A.squares},
        identities=dict(A.hidentity_squares),
        composition=dict(A.square_hcompositions),
        cells={c: (alpha, beta) for c, (alpha, beta, _, _) in cells.items()},
        cell_identities={
            alpha: cell_id(A.e_square(A.top(alpha)), A.e_square(A.bottom(alpha)), alpha, alpha)
            for alpha in A.squares
        },
        vertical_composition=vertical,
        horizontal_composition=horizontal,
    )


def vertical_morphism_functor(F: DoubleFunctor) -> TwoFunctor:
    """𝒱F."""
    source_cells = vertical_morphism_cells(F.source)
    return TwoFunctor(
        name=f"V({F.name})",
        source=vertical_morphism_2cat(F.source),
        target=vertical_morphism_2cat(F.target),
        objects=dict(F.vmors),
        morphisms=dict(F.squares),
        cells={
            c: cell_id(F.squares[sigma0], F.squares[sigma1], F.squares[alpha], F.squares[beta])
            for c, (alpha, beta, sigma0, sigma1) in source_cells.items()
        },
    )


def left_adjoint_l(A: TwoCategory) -> DoubleCategory:
    """𝕃A = ℍA × 𝕍𝟚."""
    result = product(horizontal_embed(A), vertical_arrow())
    return result.model_copy(update={"name": f"L({A.name})"})


def lv_counit(A: DoubleCategory) -> DoubleFunctor:
    """The counit 𝕃𝒱A -> A of 𝕃 ⊣ 𝒱.

    ``<u|0>`` and ``<u|1>`` go to the ends of ``u``; a morphism ``α`` of 𝒱A
    over ``id_0``/``id_1`` goes to its top/bottom; a 2-cell ``(σ0, σ1)``
    over ``box_0``/``box_1`` goes to ``σ0``/``σ1`` and over ``id_u`` to the
    common pasting ``β • σ0``.
    """
    V = vertical_morphism_2cat(A)
    HV = horizontal_embed(V)
    arrow = vertical_arrow()
    source = left_adjoint_l(V)
    cells = vertical_morphism_cells(A)

    objects = {}
    for u in V.objects:
        objects[pair_id(u, "0")] = A.vsrc(u)
        objects[pair_id(u, "1")] = A.vtgt(u)
    hmors = {}
    for alpha in V.morphisms:
        hmors[pair_id(alpha, arrow.hid("0"))] = A.top(alpha)
        hmors[pair_id(alpha, arrow.hid("1"))] = A.bottom(alpha)
    vmors = {}
    for u in V.objects:
        e_u = HV.vid(u)
        vmors[pair_id(e_u, arrow.vid("0"))] = A.vid(A.vsrc(u))
        vmors[pair_id(e_u, arrow.vid("1"))] = A.vid(A.vtgt(u))
        vmors[pair_id(e_u, "u")] = u
    squares = {}
    for c, (_, beta, sigma0, sigma1) in cells.items():
        squares[pair_id(c, arrow.box("0"))] = sigma0
        squares[pair_id(c, arrow.box("1"))] = sigma1
        squares[pair_id(c, arrow.id_square("u"))] = A.vcomp_sq(beta, sigma0)
    return DoubleFunctor(
        name=f"counit_{A.name}",
        source=source,
        target=A,
        objects=objects,
        hmors=hmors,
        vmors=vmors,
        squares=squares,
    )

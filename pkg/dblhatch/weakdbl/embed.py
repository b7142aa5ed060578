"""
ℍ^w, 𝐇^w and 𝒱^w: the horizontal embedding of bicategories, the underlying
horizontal bicategory and the bicategory of vertical morphisms, carrying
associators and unitors along.
"""

from dblhatch.construct.embed import horizontal_embed, underlying_horizontal
from dblhatch.construct.vertical import cell_id, vertical_morphism_2cat, vertical_morphism_functor
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.fincat.twocat import Bicategory, TwoFunctor
from dblhatch.weakdbl.double import WeakDoubleCategory, as_weak


def horizontal_embed_weak(B: Bicategory) -> WeakDoubleCategory:
    return WeakDoubleCategory(
        **dict(horizontal_embed(B)),
        associators=dict(B.associators),
        left_unitors=dict(B.left_unitors),
        right_unitors=dict(B.right_unitors),
    )


def underlying_horizontal_weak(B: DoubleCategory) -> Bicategory:
    B = as_weak(B)
    return Bicategory(
        **dict(underlying_horizontal(B)),
        associators=dict(B.associators),
        left_unitors=dict(B.left_unitors),
        right_unitors=dict(B.right_unitors),
    )


def vertical_morphism_bicat(B: DoubleCategory) -> Bicategory:
    """𝒱^w B. A coherence 2-cell between squares is the pair of coherence
    squares on their tops and bottoms."""
    B = as_weak(B)
    associators = {}
    for psi, theta in B.square_hpairs():
        for chi in B.squares_with_left(B.right(psi)):
            associators[(theta, psi, chi)] = cell_id(
                B.associator(B.top(theta), B.top(psi), B.top(chi)),
                B.associator(B.bottom(theta), B.bottom(psi), B.bottom(chi)),
                B.hcomp_sq(B.hcomp_sq(chi, psi), theta),
                B.hcomp_sq(chi, B.hcomp_sq(psi, theta)),
            )
    left_unitors, right_unitors = {}, {}
    for alpha in sorted(B.squares):
        top, bottom = B.top(alpha), B.bottom(alpha)
        left_unitors[alpha] = cell_id(
            B.left_unitor(top), B.left_unitor(bottom), B.hcomp_sq(B.id_square(B.right(alpha)), alpha), alpha
        )
        right_unitors[alpha] = cell_id(
            B.right_unitor(top), B.right_unitor(bottom), B.hcomp_sq(alpha, B.id_square(B.left(alpha))), alpha
        )
    return Bicategory(
        **dict(vertical_morphism_2cat(B)),
        associators=associators,
        left_unitors=left_unitors,
        right_unitors=right_unitors,
    )


def underlying_horizontal_weak_functor(F: DoubleFunctor) -> TwoFunctor:
    source, target = underlying_horizontal_weak(F.source), underlying_horizontal_weak(F.target)
    return TwoFunctor(
        name=f"H({F.name})",
        source=source,
        target=target,
        objects=dict(F.objects),
        morphisms=dict(F.hmors),
        cells={alpha: F.squares[alpha] for alpha in source.cells},
    )


def vertical_morphism_bicat_functor(F: DoubleFunctor) -> TwoFunctor:
    """𝒱^w F."""
    strict = vertical_morphism_functor(F)
    return TwoFunctor(
        **{
            **dict(strict),
            "source": vertical_morphism_bicat(F.source),
            "target": vertical_morphism_bicat(F.target),
        }
    )

"""
The adjunctions between 2-categories and double categories:
ℍ ⊣ 𝐇 (horizontal) and their transposes 𝕍 ⊣ 𝐕 (vertical).
"""

from dblhatch.dblcore.builder import videntity_name
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.dblcore.ops import transpose, transpose_functor
from dblhatch.fincat.category import FinCategory
from dblhatch.fincat.twocat import TwoCategory, TwoFunctor


def horizontal_embed(A: TwoCategory) -> DoubleCategory:
    """ℍA: the 2-category ``A`` with only identity vertical morphisms; its
    squares are the 2-cells of ``A``."""
    videntities = {x: videntity_name(x) for x in A.objects}
    squares = {}
    for theta, (f, g) in A.cells.items():
        x, y = A.morphisms[f]
        squares[theta] = (f, g, videntities[x], videntities[y])
    return DoubleCategory(
        name=f"H({A.name})",
        objects=list(A.objects),
        hmors=dict(A.morphisms),
        vmors={e: (x, x) for x, e in videntities.items()},
        squares=squares,
        hidentities=dict(A.identities),
        videntities=videntities,
        hcompositions=dict(A.composition),
        vcompositions={(e, e): e for e in videntities.values()},
        hidentity_squares={e: A.identity_cell(A.identity(x)) for x, e in videntities.items()},
        videntity_squares=dict(A.cell_identities),
        square_hcompositions=dict(A.horizontal_composition),
        square_vcompositions=dict(A.vertical_composition),
    )


def underlying_horizontal(A: DoubleCategory) -> TwoCategory:
    """𝐇A: objects, horizontal morphisms and globular squares."""
    cells = {alpha: (A.top(alpha), A.bottom(alpha)) for alpha in A.squares if A.is_globular(alpha)}
    return TwoCategory(
        name=f"H({A.name})",
        objects=list(A.objects),
        morphisms=dict(A.hmors),
        identities=dict(A.hidentities),
        composition=dict(A.hcompositions),
        cells=cells,
        cell_identities=dict(A.videntity_squares),
        vertical_composition={
            pair: gamma
            for pair, gamma in A.square_vcompositions.items()
            if pair[0] in cells and pair[1] in cells
        },
        horizontal_composition={
            pair: gamma
            for pair, gamma in A.square_hcompositions.items()
            if pair[0] in cells and pair[1] in cells
        },
    )


def vertical_embed(A: TwoCategory) -> DoubleCategory:
    """𝕍A = transpose of ℍA."""
    return transpose(horizontal_embed(A))


def underlying_vertical(A: DoubleCategory) -> TwoCategory:
    """𝐕A: objects, vertical morphisms and squares with identity horizontal sides."""
    return underlying_horizontal(transpose(A))


def underlying_horizontal_category(A: DoubleCategory) -> FinCategory:
    return A.horizontal_category()


def underlying_vertical_category(A: DoubleCategory) -> FinCategory:
    return A.vertical_category()


def horizontal_embed_functor(F: TwoFunctor) -> DoubleFunctor:
    source, target = horizontal_embed(F.source), horizontal_embed(F.target)
    return DoubleFunctor(
        name=f"H({F.name})",
        source=source,
        target=target,
        objects=dict(F.objects),
        hmors=dict(F.morphisms),
        vmors={source.vid(x): target.vid(y) for x, y in F.objects.items()},
        squares=dict(F.cells),
    )


def underlying_horizontal_functor(F: DoubleFunctor) -> TwoFunctor:
    source, target = underlying_horizontal(F.source), underlying_horizontal(F.target)
    return TwoFunctor(
        name=f"H({F.name})",
        source=source,
        target=target,
        objects=dict(F.objects),
        morphisms=dict(F.hmors),
        cells={alpha: F.squares[alpha] for alpha in source.cells},
    )


def vertical_embed_functor(F: TwoFunctor) -> DoubleFunctor:
    return transpose_functor(horizontal_embed_functor(F))


def underlying_vertical_functor(F: DoubleFunctor) -> TwoFunctor:
    return underlying_horizontal_functor(transpose_functor(F))

"""
The pseudo hom [A, B]_ps and its underlying 2-categories.
"""

from dblhatch.construct.embed import underlying_horizontal
from dblhatch.construct.hom import HomData, internal_hom_data
from dblhatch.construct.vertical import vertical_morphism_2cat
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.fincat.twocat import TwoCategory
from dblhatch.utils.search import Budget


def pseudo_hom_data(
    A: DoubleCategory, B: DoubleCategory, budget: Budget | None = None
) -> tuple[DoubleCategory, HomData]:
    return internal_hom_data(A, B, pseudo=True, budget=budget)


def pseudo_hom(A: DoubleCategory, B: DoubleCategory, budget: Budget | None = None) -> DoubleCategory:
    """[A, B]_ps: double functors, horizontal and vertical pseudo
    transformations and modifications."""
    return pseudo_hom_data(A, B, budget)[0]


def pseudo_hom_horizontal(A: DoubleCategory, B: DoubleCategory, budget: Budget | None = None) -> TwoCategory:
    """𝐇[A, B]_ps."""
    return underlying_horizontal(pseudo_hom(A, B, budget))


def pseudo_hom_vertical(A: DoubleCategory, B: DoubleCategory, budget: Budget | None = None) -> TwoCategory:
    """𝒱[A, B]_ps."""
    return vertical_morphism_2cat(pseudo_hom(A, B, budget))

"""
Builtin corpus: named categories, 2-categories, double categories, weak
double categories and double functors, exportable as DBLX.
"""

from collections.abc import Callable

from pydantic import BaseModel

from dblhatch.construct.embed import horizontal_embed
from dblhatch.dblcore.functor import identity_double_functor, terminal_functor
from dblhatch.dblcore.shapes import (
    empty_double_category,
    free_square,
    horizontal_arrow,
    horizontal_chain,
    parallel_squares,
    point,
    square_boundary,
    two_points,
    vertical_arrow,
    vertical_chain,
)
from dblhatch.errors import UnknownName
from dblhatch.fincat.shapes import (
    arrow_category,
    chain_category,
    commutative_square_category,
    discrete_category,
    idempotent_category,
    invertible_2cell_2category,
    isomorphism_category,
    terminal_category,
)
from dblhatch.fincat.truncation import discrete_2cat
from dblhatch.model.generators import i1, i2, i3, i4, i5, j2, vertical_arrow_fold
from dblhatch.weakdbl.shapes import bracket, self_inverse_unitor


def _renamed(factory: Callable[[], BaseModel], name: str) -> Callable[[], BaseModel]:
    return lambda: factory().model_copy(update={"name": name})


def _cinv_h() -> BaseModel:
    return horizontal_embed(invertible_2cell_2category())


def _iso_h() -> BaseModel:
    return horizontal_embed(discrete_2cat(isomorphism_category()))


CORPUS: dict[str, Callable[[], BaseModel]] = {
    # double categories
    "One": point,
    "Empty": empty_double_category,
    "OneOne": two_points,
    "TwoH": horizontal_arrow,
    "TwoV": vertical_arrow,
    "HThree": horizontal_chain,
    "VThree": vertical_chain,
    "Sq": free_square,
    "dSq": square_boundary,
    "Sq2": parallel_squares,
    "CinvH": _renamed(_cinv_h, "CinvH"),
    "IsoH": _renamed(_iso_h, "IsoH"),
    # weak double categories
    "W": self_inverse_unitor,
    "Bracket": bracket,
    # categories and 2-categories
    "OneCat": terminal_category,
    "OneOneCat": lambda: discrete_category("0", "1", name="OneOneCat"),
    "Two": arrow_category,
    "Three": chain_category,
    "Iso": isomorphism_category,
    "CommSquare": commutative_square_category,
    "Idem": idempotent_category,
    "Cinv": invertible_2cell_2category,
    # double functors
    "I1": i1,
    "I2": i2,
    "I3": i3,
    "I4": i4,
    "I5": i5,
    "J2": j2,
    "epsilonV2": _renamed(vertical_arrow_fold, "epsilonV2"),
    "idS": _renamed(lambda: identity_double_functor(free_square()), "idS"),
    "IsoCollapse": _renamed(lambda: terminal_functor(_iso_h(), point()), "IsoCollapse"),
}


def corpus_names() -> list[str]:
    return list(CORPUS)


def corpus_entry(name: str) -> BaseModel:
    """A fresh copy of the named corpus object.

    Raises:
        UnknownName: if ``name`` is not in the corpus.
    """
    factory = CORPUS.get(name)
    if factory is None:
        raise UnknownName(name)
    return factory()

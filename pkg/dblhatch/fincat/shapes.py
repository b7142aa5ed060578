"""
Small named categories and 2-categories used as test shapes and corpus entries.
"""

from dblhatch.fincat.builder import CategoryBuilder, TwoCategoryBuilder
from dblhatch.fincat.category import FinCategory
from dblhatch.fincat.twocat import TwoCategory


def terminal_category() -> FinCategory:
    return CategoryBuilder("OneCat").objects("0").build()


def discrete_category(*objects: str, name: str = "") -> FinCategory:
    return CategoryBuilder(name).objects(*objects).build()


def arrow_category() -> FinCategory:
    """𝟚: a single morphism ``f: 0 -> 1``."""
    return CategoryBuilder("Two").morphism("f", "0", "1").build()


def chain_category() -> FinCategory:
    """𝟛: ``f: 0 -> 1``, ``g: 1 -> 2`` and their composite."""
    return (
        CategoryBuilder("Three")
        .morphism("f", "0", "1")
        .morphism("g", "1", "2")
        .morphism("gf", "0", "2")
        .compose("g", "f", "gf")
        .build()
    )


def isomorphism_category() -> FinCategory:
    """The free-living isomorphism ``f: 0 ≅ 1`` with inverse ``g``."""
    return (
        CategoryBuilder("Iso")
        .morphism("f", "0", "1")
        .morphism("g", "1", "0")
        .compose("g", "f", "id_0")
        .compose("f", "g", "id_1")
        .build()
    )


def commutative_square_category() -> FinCategory:
    return (
        CategoryBuilder("CommSquare")
        .morphism("f", "0", "1")
        .morphism("g", "1", "3")
        .morphism("h", "0", "2")
        .morphism("k", "2", "3")
        .morphism("d", "0", "3")
        .compose("g", "f", "d")
        .compose("k", "h", "d")
        .build()
    )


def idempotent_category() -> FinCategory:
    """One object with a non-identity idempotent ``x∘x = x``."""
    return CategoryBuilder("Idem").morphism("x", "0", "0").compose("x", "x", "x").build()


def invertible_2cell_2category() -> TwoCategory:
    """C_inv: parallel ``f, g: 0 -> 1`` with an invertible 2-cell ``t: f ⇒ g``."""
    return (
        TwoCategoryBuilder("Cinv")
        .morphism("f", "0", "1")
        .morphism("g", "0", "1")
        .cell("t", "f", "g")
        .cell("u", "g", "f")
        .vcompose("u", "t", "1_f")
        .vcompose("t", "u", "1_g")
        .build()
    )

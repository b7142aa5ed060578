"""
Small named double categories: the shapes of the generating cofibrations
and the other builtin corpus entries that need no construction.
"""

from dblhatch.dblcore.builder import DoubleCategoryBuilder
from dblhatch.dblcore.double import DoubleCategory


def point() -> DoubleCategory:
    """𝟙, the terminal double category."""
    return DoubleCategoryBuilder("One").objects("0").build()


def empty_double_category() -> DoubleCategory:
    """∅, the initial double category."""
    return DoubleCategoryBuilder("Empty").build()


def two_points() -> DoubleCategory:
    """𝟙⊔𝟙."""
    return DoubleCategoryBuilder("OneOne").objects("0", "1").build()


def horizontal_arrow() -> DoubleCategory:
    """ℍ𝟚: one horizontal morphism ``a: 0 -> 1``."""
    return DoubleCategoryBuilder("TwoH").hmor("a", "0", "1").build()


def vertical_arrow() -> DoubleCategory:
    """𝕍𝟚: one vertical morphism ``u: 0 => 1``."""
    return DoubleCategoryBuilder("TwoV").vmor("u", "0", "1").build()


def horizontal_chain() -> DoubleCategory:
    """ℍ𝟛: composable ``a: 0 -> 1`` and ``b: 1 -> 2``."""
    return (
        DoubleCategoryBuilder("HThree")
        .hmor("a", "0", "1")
        .hmor("b", "1", "2")
        .hmor("ba", "0", "2")
        .hcompose("b", "a", "ba")
        .build()
    )


def vertical_chain() -> DoubleCategory:
    """𝕍𝟛: composable ``u: 0 => 1`` and ``v: 1 => 2``."""
    return (
        DoubleCategoryBuilder("VThree")
        .vmor("u", "0", "1")
        .vmor("v", "1", "2")
        .vmor("vu", "0", "2")
        .vcompose("v", "u", "vu")
        .build()
    )


def _frame(name: str) -> DoubleCategoryBuilder:
    #   0 --a--> 1
    #   |u       |v
    #   2 --b--> 3
    return (
        DoubleCategoryBuilder(name)
        .hmor("a", "0", "1")
        .hmor("b", "2", "3")
        .vmor("u", "0", "2")
        .vmor("v", "1", "3")
    )


def square_boundary() -> DoubleCategory:
    """δ𝕊: the boundary of a square, with no square filling it."""
    return _frame("dSq").build()


def free_square() -> DoubleCategory:
    """𝕊: the double category containing a single square ``alpha``."""
    return _frame("Sq").square("alpha", top="a", bottom="b", left="u", right="v").build()


def parallel_squares() -> DoubleCategory:
    """𝕊₂: two squares ``alpha0``, ``alpha1`` with the same boundary."""
    return (
        _frame("Sq2")
        .square("alpha0", top="a", bottom="b", left="u", right="v")
        .square("alpha1", top="a", bottom="b", left="u", right="v")
        .build()
    )

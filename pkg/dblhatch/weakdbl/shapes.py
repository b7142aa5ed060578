"""
Builtin weak double categories.
"""

from dblhatch.weakdbl.builder import WeakDoubleCategoryBuilder
from dblhatch.weakdbl.double import WeakDoubleCategory


def self_inverse_unitor() -> WeakDoubleCategory:
    """W: one object, squares ``box_0`` and ``delta`` with ``delta•delta = box_0``
    under both compositions, unitors ``delta`` and the identity associator."""
    return (
        WeakDoubleCategoryBuilder("W", strict_units=False)
        .objects("0")
        .hcompose("id_0", "id_0", "id_0")
        .square("delta", top="id_0", bottom="id_0", left="e_0", right="e_0")
        .vcompose_sq("delta", "delta", "box_0")
        .hcompose_sq("delta", "delta", "box_0")
        .hcompose_sq("delta", "box_0", "delta")
        .hcompose_sq("box_0", "delta", "delta")
        .left_unitor("id_0", "delta")
        .right_unitor("id_0", "delta")
        .build()
    )


def bracket() -> WeakDoubleCategory:
    """Three composable morphisms whose two bracketings ``cb_a = (c∘b)∘a`` and
    ``c_ba = c∘(b∘a)`` differ, related by the associator ``alpha``."""
    return (
        WeakDoubleCategoryBuilder("Bracket")
        .hmor("a", "0", "1")
        .hmor("b", "1", "2")
        .hmor("c", "2", "3")
        .hmor("ba", "0", "2")
        .hmor("cb", "1", "3")
        .hmor("cb_a", "0", "3")
        .hmor("c_ba", "0", "3")
        .hcompose("b", "a", "ba")
        .hcompose("c", "b", "cb")
        .hcompose("cb", "a", "cb_a")
        .hcompose("c", "ba", "c_ba")
        .square("alpha", top="cb_a", bottom="c_ba", left="e_0", right="e_3")
        .square("alpha_inv", top="c_ba", bottom="cb_a", left="e_0", right="e_3")
        .vcompose_sq("alpha_inv", "alpha", "e_cb_a")
        .vcompose_sq("alpha", "alpha_inv", "e_c_ba")
        .associator("a", "b", "c", "alpha")
        .build()
    )

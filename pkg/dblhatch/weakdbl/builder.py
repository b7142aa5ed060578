"""
Builder for weak double categories.

With ``strict_units`` (the default) horizontal identities stay strict and
the unitors are identity squares. Associators default to the identity
square wherever both bracketings of a triple compose to the same morphism;
every other associator, and every unitor when units are weak, has to be
declared. The one-object example with a self-inverse unitor::

    W = (
        WeakDoubleCategoryBuilder("W", strict_units=False)
        .objects("0")
        .hcompose("id_0", "id_0", "id_0")
        .square("delta", top="id_0", bottom="id_0", left="e_0", right="e_0")
        .vcompose_sq("delta", "delta", "box_0")
        ...
        .left_unitor("id_0", "delta")
        .right_unitor("id_0", "delta")
        .build()
    )
"""

from dblhatch.dblcore.builder import DoubleCategoryBuilder
from dblhatch.weakdbl.double import WeakDoubleCategory


class WeakDoubleCategoryBuilder(DoubleCategoryBuilder):
    def __init__(self, name: str = "", strict_units: bool = True):
        super().__init__(name)
        self.strict_horizontal = strict_units
        self._associators: dict[tuple[str, str, str], str] = {}
        self._left_unitors: dict[str, str] = {}
        self._right_unitors: dict[str, str] = {}

    def associator(self, a: str, b: str, c: str, square: str) -> "WeakDoubleCategoryBuilder":
        """Declare ``square: (c∘b)∘a ⇒ c∘(b∘a)``."""
        self._associators[(a, b, c)] = square
        return self

    def left_unitor(self, a: str, square: str) -> "WeakDoubleCategoryBuilder":
        self._left_unitors[a] = square
        return self

    def right_unitor(self, a: str, square: str) -> "WeakDoubleCategoryBuilder":
        self._right_unitors[a] = square
        return self

    def tables(self) -> dict:
        tables = super().tables()
        hmors, compose = tables["hmors"], tables["hcompositions"]
        e_squares = tables["videntity_squares"]

        from_object: dict[str, list[str]] = {}
        for a, (x, _) in sorted(hmors.items()):
            from_object.setdefault(x, []).append(a)
        associators = {}
        for a in sorted(hmors):
            for b in from_object.get(hmors[a][1], []):
                for c in from_object.get(hmors[b][1], []):
                    left = compose.get((compose.get((c, b)), a))
                    right = compose.get((c, compose.get((b, a))))
                    if left is not None and left == right:
                        associators[(a, b, c)] = e_squares[left]
        associators |= self._associators

        unitors = {a: e_squares[a] for a in hmors} if self.strict_horizontal else {}
        return {
            **tables,
            "associators": associators,
            "left_unitors": unitors | self._left_unitors,
            "right_unitors": unitors | self._right_unitors,
        }

    def build(self) -> WeakDoubleCategory:
        return WeakDoubleCategory(**self.tables())

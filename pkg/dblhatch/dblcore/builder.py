"""
Fluent builder for finite double categories.

Identity morphisms (``id_X``, ``e_X``), identity squares (``e_a``, ``id_u``,
``box_X``) and every composite forced by a unit law are generated; the
remaining composites must be declared::

    square = (
        DoubleCategoryBuilder("S")
        .hmor("a", "0", "1")
        .hmor("b", "0'", "1'")
        .vmor("u", "0", "0'")
        .vmor("v", "1", "1'")
        .square("alpha", top="a", bottom="b", left="u", right="v")
        .build()
    )
"""

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.fincat.builder import put


def hidentity_name(x: str) -> str:
    return f"id_{x}"


def videntity_name(x: str) -> str:
    return f"e_{x}"


def box_name(x: str) -> str:
    return f"box_{x}"


class DoubleCategoryBuilder:
    #: weak subclasses turn this off and declare unit composites explicitly
    strict_horizontal = True

    def __init__(self, name: str = ""):
        self.name = name
        self._objects: list[str] = []
        self._hmors: dict[str, tuple[str, str]] = {}
        self._vmors: dict[str, tuple[str, str]] = {}
        self._squares: dict[str, tuple[str, str, str, str]] = {}
        self._hcomps: list[tuple[str, str, str]] = []
        self._vcomps: list[tuple[str, str, str]] = []
        self._square_hcomps: list[tuple[str, str, str]] = []
        self._square_vcomps: list[tuple[str, str, str]] = []

    def objects(self, *names: str) -> "DoubleCategoryBuilder":
        self._objects.extend(n for n in names if n not in self._objects)
        return self

    def hmor(self, name: str, src: str, tgt: str) -> "DoubleCategoryBuilder":
        self.objects(src, tgt)
        self._hmors[name] = (src, tgt)
        return self

    def vmor(self, name: str, src: str, tgt: str) -> "DoubleCategoryBuilder":
        self.objects(src, tgt)
        self._vmors[name] = (src, tgt)
        return self

    def square(self, name: str, top: str, bottom: str, left: str, right: str) -> "DoubleCategoryBuilder":
        self._squares[name] = (top, bottom, left, right)
        return self

    def hcompose(self, b: str, a: str, result: str) -> "DoubleCategoryBuilder":
        """Declare ``b∘a = result``."""
        self._hcomps.append((b, a, result))
        return self

    def vcompose(self, v: str, u: str, result: str) -> "DoubleCategoryBuilder":
        """Declare ``v•u = result`` (``u`` on top)."""
        self._vcomps.append((v, u, result))
        return self

    def hcompose_sq(self, beta: str, alpha: str, result: str) -> "DoubleCategoryBuilder":
        """Declare the horizontal composite with ``alpha`` on the left."""
        self._square_hcomps.append((beta, alpha, result))
        return self

    def vcompose_sq(self, beta: str, alpha: str, result: str) -> "DoubleCategoryBuilder":
        """Declare the vertical composite with ``alpha`` on top."""
        self._square_vcomps.append((beta, alpha, result))
        return self

    def tables(self) -> dict:
        """Complete the declared data to keyword arguments of DoubleCategory."""
        hmors = dict(self._hmors)
        vmors = dict(self._vmors)
        hidentities, videntities = {}, {}
        for x in self._objects:
            hidentities[x] = hidentity_name(x)
            videntities[x] = videntity_name(x)
            hmors[hidentity_name(x)] = (x, x)
            vmors[videntity_name(x)] = (x, x)

        squares = dict(self._squares)
        videntity_squares, hidentity_squares = {}, {}
        for x in self._objects:
            videntity_squares[hidentity_name(x)] = box_name(x)
            hidentity_squares[videntity_name(x)] = box_name(x)
        for a, (x, y) in hmors.items():
            sq = videntity_squares.setdefault(a, f"e_{a}")
            squares[sq] = (a, a, videntities[x], videntities[y])
        for u, (x, y) in vmors.items():
            sq = hidentity_squares.setdefault(u, f"id_{u}")
            squares[sq] = (hidentities[x], hidentities[y], u, u)

        hcompositions: dict[tuple[str, str], str] = {}
        vcompositions: dict[tuple[str, str], str] = {}
        for u, (x, y) in vmors.items():
            put(vcompositions, (u, videntities[x]), u)
            put(vcompositions, (videntities[y], u), u)
        if self.strict_horizontal:
            for a, (x, y) in hmors.items():
                put(hcompositions, (a, hidentities[x]), a)
                put(hcompositions, (hidentities[y], a), a)
        for b, a, c in self._hcomps:
            put(hcompositions, (b, a), c)
        for v, u, w in self._vcomps:
            put(vcompositions, (v, u), w)

        square_hcompositions: dict[tuple[str, str], str] = {}
        square_vcompositions: dict[tuple[str, str], str] = {}
        for (b, a), c in hcompositions.items():
            put(square_hcompositions, (videntity_squares[b], videntity_squares[a]), videntity_squares[c])
        for (v, u), w in vcompositions.items():
            put(square_vcompositions, (hidentity_squares[v], hidentity_squares[u]), hidentity_squares[w])
        for alpha, (top, bottom, left, right) in squares.items():
            put(square_vcompositions, (alpha, videntity_squares[top]), alpha)
            put(square_vcompositions, (videntity_squares[bottom], alpha), alpha)
            if self.strict_horizontal:
                put(square_hcompositions, (alpha, hidentity_squares[left]), alpha)
                put(square_hcompositions, (hidentity_squares[right], alpha), alpha)
        for beta, alpha, gamma in self._square_hcomps:
            put(square_hcompositions, (beta, alpha), gamma)
        for beta, alpha, gamma in self._square_vcomps:
            put(square_vcompositions, (beta, alpha), gamma)

        return {
            "name": self.name,
            "objects": list(self._objects),
            "hmors": hmors,
            "vmors": vmors,
            "squares": squares,
            "hidentities": hidentities,
            "videntities": videntities,
            "hcompositions": hcompositions,
            "vcompositions": vcompositions,
            "hidentity_squares": hidentity_squares,
            "videntity_squares": videntity_squares,
            "square_hcompositions": square_hcompositions,
            "square_vcompositions": square_vcompositions,
        }

    def build(self) -> DoubleCategory:
        return DoubleCategory(**self.tables())

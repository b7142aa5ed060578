"""
Strictification: the quotient of a weak double category in which the
associators and unitors become identities, and the quotient unit.

The congruence is generated on horizontal morphisms by
``(c∘b)∘a ~ c∘(b∘a)`` and ``id∘a ~ a ~ a∘id``, and on squares by identifying
every coherence square with the identity square on its bottom. It is then
saturated under horizontal composition of morphisms, under both square
compositions and under ``a ~ a′ ⟹ e_a ~ e_a′`` until nothing changes.
Objects and vertical morphisms are never identified.
"""

import logging

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict

from dblhatch.construct.embed import underlying_horizontal
from dblhatch.dblcore.double import DoubleCategory, check_double_tables, double_violations
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.errors import InternalInconsistency
from dblhatch.fincat.twocat import Bicategory, TwoCategory
from dblhatch.weakdbl.double import WeakDoubleCategory, as_weak
from dblhatch.weakdbl.embed import horizontal_embed_weak


class StrictificationResult(BaseModel):
    """``unit`` goes from the weak input to ``strict`` seen as a weak double
    category; it is bijective on objects and vertical morphisms."""

    model_config = ConfigDict(frozen=True)

    strict: DoubleCategory
    unit: DoubleFunctor


def _close(classes: UnionFind, table: dict[tuple[str, str], str]) -> bool:
    """Identify the results of entries whose arguments are identified."""
    changed = False
    seen: dict[tuple[str, str], str] = {}
    for (y, x), z in sorted(table.items()):
        first = seen.setdefault((classes[y], classes[x]), z)
        if classes[first] != classes[z]:
            classes.union(first, z)
            changed = True
    return changed


class _Congruence:
    def __init__(self, B: WeakDoubleCategory):
        self.B = B
        self.hmors = UnionFind(sorted(B.hmors))
        self.squares = UnionFind(sorted(B.squares))

    def generate(self) -> None:
        B = self.B
        for a, b, c in B.hcomposable_triples():
            bottom = B.hcomp(c, B.hcomp(b, a))
            self.hmors.union(B.hcomp(B.hcomp(c, b), a), bottom)
            self.squares.union(B.associator(a, b, c), B.e_square(bottom))
        for a in sorted(B.hmors):
            x, y = B.hmors[a]
            self.hmors.union(B.hcomp(B.hid(y), a), a, B.hcomp(a, B.hid(x)))
            self.squares.union(B.left_unitor(a), B.e_square(a), B.right_unitor(a))

    def saturate(self) -> int:
        B = self.B
        rounds = 0
        changed = True
        while changed:
            rounds += 1
            changed = _close(self.hmors, B.hcompositions)
            for group in self.hmors.to_sets():
                changed |= self._union_all(self.squares, [B.e_square(a) for a in group])
            changed |= _close(self.squares, B.square_hcompositions)
            changed |= _close(self.squares, B.square_vcompositions)
        return rounds

    @staticmethod
    def _union_all(classes: UnionFind, cells: list[str]) -> bool:
        roots = {classes[c] for c in cells}
        if len(roots) > 1:
            classes.union(*cells)
            return True
        return False

    def representatives(self, classes: UnionFind, identities: set[str]) -> dict[str, str]:
        """Each cell's class name: identity cells first, then the smallest id."""
        names = {}
        for group in classes.to_sets():
            name = min(group, key=lambda c: (c not in identities, c))
            names |= dict.fromkeys(group, name)
        return names


def _quotient(B: WeakDoubleCategory, h: dict[str, str], s: dict[str, str]) -> DoubleCategory:
    return DoubleCategory(
        name=f"S({B.name})",
        objects=list(B.objects),
        hmors={h[a]: ends for a, ends in B.hmors.items()},
        vmors=dict(B.vmors),
        squares={
            s[alpha]: (h[top], h[bottom], left, right)
            for alpha, (top, bottom, left, right) in B.squares.items()
        },
        hidentities={x: h[a] for x, a in B.hidentities.items()},
        videntities=dict(B.videntities),
        hcompositions={(h[b], h[a]): h[c] for (b, a), c in B.hcompositions.items()},
        vcompositions=dict(B.vcompositions),
        hidentity_squares={u: s[alpha] for u, alpha in B.hidentity_squares.items()},
        videntity_squares={h[a]: s[alpha] for a, alpha in B.videntity_squares.items()},
        square_hcompositions={
            (s[beta], s[alpha]): s[gamma] for (beta, alpha), gamma in B.square_hcompositions.items()
        },
        square_vcompositions={
            (s[beta], s[alpha]): s[gamma] for (beta, alpha), gamma in B.square_vcompositions.items()
        },
    )


def strictify(B: DoubleCategory) -> StrictificationResult:
    """S(B) and the quotient unit ``B -> S(B)``.

    Raises:
        InternalInconsistency: if the quotient fails a strict double-category law.
    """
    B = as_weak(B)
    congruence = _Congruence(B)
    congruence.generate()
    rounds = congruence.saturate()
    h = congruence.representatives(congruence.hmors, set(B.hidentities.values()))
    s = congruence.representatives(
        congruence.squares, set(B.videntity_squares.values()) | set(B.hidentity_squares.values())
    )

    strict = _quotient(B, h, s)
    check_double_tables(strict)
    violations = double_violations(strict)
    if violations:
        logging.warning(f"Quotient of {B.name} is not a strict double category: {violations[0]}")
        raise InternalInconsistency(f"strictification of {B.name} fails {violations[0]}")
    logging.info(
        f"Strictified {B.name} in {rounds} rounds: {len(B.hmors)} -> {len(strict.hmors)} "
        f"horizontal morphisms, {len(B.squares)} -> {len(strict.squares)} squares"
    )

    unit = DoubleFunctor(
        name=f"unit_{B.name}",
        source=B,
        target=as_weak(strict),
        objects={x: x for x in B.objects},
        hmors=h,
        vmors={u: u for u in B.vmors},
        squares=s,
    )
    return StrictificationResult(strict=strict, unit=unit)


def strictify_bicategory(B: Bicategory) -> TwoCategory:
    """The strict 2-category 𝐇 S ℍ^w B."""
    strict = underlying_horizontal(strictify(horizontal_embed_weak(B)).strict)
    return strict.model_copy(update={"name": f"S({B.name})"})

"""
Strict double functors: validation, enumeration, composition and isomorphism search.
"""

import logging
from collections.abc import Iterator
from typing import Protocol

from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.utils.search import Budget
from dblhatch.utils.structure import (
    Mapping,
    Presentation,
    Restriction,
    check_map,
    enumerate_maps,
    find_isomorphism,
)
from dblhatch.utils.types import ValidationReport


class DoubleFunctor(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    source: DoubleCategory
    target: DoubleCategory
    objects: dict[str, str]
    hmors: dict[str, str]
    vmors: dict[str, str]
    squares: dict[str, str]

    def mapping(self) -> Mapping:
        return {
            "ob": dict(self.objects),
            "h": dict(self.hmors),
            "v": dict(self.vmors),
            "sq": dict(self.squares),
        }

    @classmethod
    def from_mapping(
        cls, source: DoubleCategory, target: DoubleCategory, mapping: Mapping, name: str = ""
    ) -> "DoubleFunctor":
        return cls(
            name=name,
            source=source,
            target=target,
            objects=mapping["ob"],
            hmors=mapping["h"],
            vmors=mapping["v"],
            squares=mapping["sq"],
        )

    def compositor(self, a: str, c: str) -> str:
        """The comparison square ``Fc∘Fa ⇒ F(c∘a)``; an identity square for strict functors."""
        return self.target.e_square(self.hmors[self.source.hcomp(c, a)])

    def unitor(self, x: str) -> str:
        """The comparison square ``id_{FX} ⇒ F(id_X)``."""
        return self.target.e_square(self.hmors[self.source.hid(x)])


def validate_double_functor(functor: DoubleFunctor) -> ValidationReport:
    """Preservation failures of identities and the four compositions.

    Raises:
        MalformedMap: if the map is partial, names unknown ids or breaks a boundary.
    """
    violations = check_map(
        functor.source.presentation(), functor.target.presentation(), functor.mapping()
    )
    if violations:
        logging.info(f"Double functor {functor.name!r} fails {len(violations)} preservation checks")
    return ValidationReport(subject=functor.name, violations=violations)


def enumerate_double_functors(
    source: DoubleCategory,
    target: DoubleCategory,
    budget: Budget | None = None,
    restrict: Restriction | None = None,
) -> Iterator[DoubleFunctor]:
    """Every strict double functor ``source -> target``, each once, in
    deterministic order.

    Composites and identities are forced from already placed generators, so
    only indecomposable cells are branched on.

    Raises:
        BudgetExceeded: if the search visits more nodes than allowed.
    """
    maps = enumerate_maps(source.presentation(), target.presentation(), budget, restrict=restrict)
    for i, mapping in enumerate(maps):
        yield DoubleFunctor.from_mapping(source, target, mapping, name=f"F{i}")


def identity_double_functor(A: DoubleCategory) -> DoubleFunctor:
    return DoubleFunctor(
        name=f"id_{A.name}",
        source=A,
        target=A,
        objects={x: x for x in A.objects},
        hmors={a: a for a in A.hmors},
        vmors={u: u for u in A.vmors},
        squares={s: s for s in A.squares},
    )


def compose_double_functors(second: DoubleFunctor, first: DoubleFunctor) -> DoubleFunctor:
    """``second ∘ first``."""
    return DoubleFunctor(
        name=f"{second.name}.{first.name}",
        source=first.source,
        target=second.target,
        objects={x: second.objects[y] for x, y in first.objects.items()},
        hmors={a: second.hmors[b] for a, b in first.hmors.items()},
        vmors={u: second.vmors[v] for u, v in first.vmors.items()},
        squares={s: second.squares[t] for s, t in first.squares.items()},
    )


def constant_functor(source: DoubleCategory, target: DoubleCategory, x: str) -> DoubleFunctor:
    """Everything to the identities of the object ``x``."""
    return DoubleFunctor(
        name=f"const_{x}",
        source=source,
        target=target,
        objects={y: x for y in source.objects},
        hmors={a: target.hid(x) for a in source.hmors},
        vmors={u: target.vid(x) for u in source.vmors},
        squares={s: target.box(x) for s in source.squares},
    )


def terminal_functor(A: DoubleCategory, point: DoubleCategory) -> DoubleFunctor:
    """The unique functor into the terminal double category ``point``."""
    (x,) = point.objects
    functor = constant_functor(A, point, x)
    return functor.model_copy(update={"name": f"!_{A.name}"})


def initial_functor(empty: DoubleCategory, A: DoubleCategory) -> DoubleFunctor:
    """The unique functor out of the empty double category."""
    return DoubleFunctor(
        name=f"0_{A.name}", source=empty, target=A, objects={}, hmors={}, vmors={}, squares={}
    )


class Presentable(Protocol):
    def presentation(self) -> Presentation: ...


def find_structure_isomorphism(
    source: Presentable, target: Presentable, budget: Budget | None = None
) -> Mapping | None:
    """An isomorphism between two categories, 2-categories or double categories."""
    return find_isomorphism(source.presentation(), target.presentation(), budget)


def are_isomorphic(source: Presentable, target: Presentable, budget: Budget | None = None) -> bool:
    return find_structure_isomorphism(source, target, budget) is not None


def find_double_isomorphism(
    source: DoubleCategory, target: DoubleCategory, budget: Budget | None = None
) -> DoubleFunctor | None:
    mapping = find_structure_isomorphism(source, target, budget)
    if mapping is None:
        return None
    return DoubleFunctor.from_mapping(source, target, mapping, name=f"iso_{source.name}_{target.name}")

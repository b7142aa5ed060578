"""
Finite 1-categories with explicit composition tables.
"""

import logging
from collections.abc import Iterator
from itertools import product
from typing import Protocol

from pydantic import BaseModel, ConfigDict, PrivateAttr

from dblhatch.errors import MalformedTable
from dblhatch.utils.search import Budget
from dblhatch.utils.structure import Mapping, Operation, Presentation, check_map, enumerate_maps
from dblhatch.utils.types import ValidationReport, Violation


class FinCategory(BaseModel):
    """A finite category.

    ``composition`` maps a pair ``(g, f)`` to ``g∘f``; it must be defined
    exactly on pairs with ``tgt(f) == src(g)``.
    """

    model_config = ConfigDict(frozen=True)

    name: str = ""
    objects: list[str]
    morphisms: dict[str, tuple[str, str]]
    identities: dict[str, str]
    composition: dict[tuple[str, str], str]

    _cache: dict = PrivateAttr(default_factory=dict)

    def src(self, f: str) -> str:
        return self.morphisms[f][0]

    def tgt(self, f: str) -> str:
        return self.morphisms[f][1]

    def identity(self, obj: str) -> str:
        return self.identities[obj]

    def compose(self, g: str, f: str) -> str | None:
        return self.composition.get((g, f))

    def is_identity(self, f: str) -> bool:
        return f in self._identity_set()

    def _identity_set(self) -> set[str]:
        if "identity_set" not in self._cache:
            self._cache["identity_set"] = set(self.identities.values())
        return self._cache["identity_set"]

    def hom(self, x: str, y: str) -> list[str]:
        """Morphisms ``x -> y`` in sorted order."""
        if "hom" not in self._cache:
            homs: dict[tuple[str, str], list[str]] = {}
            for f in sorted(self.morphisms):
                homs.setdefault(self.morphisms[f], []).append(f)
            self._cache["hom"] = homs
        return self._cache["hom"].get((x, y), [])

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        """All ``(g, f)`` with ``tgt(f) == src(g)``, sorted."""
        for f in sorted(self.morphisms):
            for g in self.hom_from(self.tgt(f)):
                yield g, f

    def hom_from(self, x: str) -> list[str]:
        return [f for f in sorted(self.morphisms) if self.src(f) == x]

    def inverse(self, f: str) -> str | None:
        """The two-sided inverse of ``f``, if any."""
        x, y = self.morphisms[f]
        return next(
            (
                g
                for g in self.hom(y, x)
                if self.compose(g, f) == self.identity(x) and self.compose(f, g) == self.identity(y)
            ),
            None,
        )

    def category_operations(self) -> list[Operation]:
        return [
            Operation(
                name="src",
                args=("mor",),
                result="ob",
                table={(f,): ends[0] for f, ends in self.morphisms.items()},
                boundary=True,
            ),
            Operation(
                name="tgt",
                args=("mor",),
                result="ob",
                table={(f,): ends[1] for f, ends in self.morphisms.items()},
                boundary=True,
            ),
            Operation(
                name="id",
                args=("ob",),
                result="mor",
                table={(x,): f for x, f in self.identities.items()},
            ),
            Operation(name="comp", args=("mor", "mor"), result="mor", table=dict(self.composition)),
        ]

    def presentation(self) -> Presentation:
        if "presentation" not in self._cache:
            self._cache["presentation"] = Presentation(
                kinds=("ob", "mor"),
                cells={"ob": sorted(self.objects), "mor": sorted(self.morphisms)},
                operations=self.category_operations(),
            )
        return self._cache["presentation"]

    def underlying(self) -> "FinCategory":
        return FinCategory(
            name=self.name,
            objects=list(self.objects),
            morphisms=dict(self.morphisms),
            identities=dict(self.identities),
            composition=dict(self.composition),
        )


class CatFunctor(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    source: FinCategory
    target: FinCategory
    objects: dict[str, str]
    morphisms: dict[str, str]

    def mapping(self) -> Mapping:
        return {"ob": dict(self.objects), "mor": dict(self.morphisms)}

    @classmethod
    def from_mapping(
        cls, source: FinCategory, target: FinCategory, mapping: Mapping, name: str = ""
    ) -> "CatFunctor":
        return cls(
            name=name,
            source=source,
            target=target,
            objects=mapping["ob"],
            morphisms=mapping["mor"],
        )


def check_category_tables(category: FinCategory) -> None:
    """Raise MalformedTable if a table references unknown ids or incomposable pairs."""
    objects = set(category.objects)
    for f, (x, y) in sorted(category.morphisms.items()):
        if x not in objects or y not in objects:
            raise MalformedTable(f"morphism {f} has an unknown end", [f])
    for x, f in sorted(category.identities.items()):
        if x not in objects or f not in category.morphisms:
            raise MalformedTable(f"identity of {x} references unknown ids", [x, f])
    for (g, f), h in sorted(category.composition.items()):
        if any(m not in category.morphisms for m in (g, f, h)):
            raise MalformedTable(f"composite {g}*{f} references unknown ids", [g, f, h])
        if category.tgt(f) != category.src(g):
            raise MalformedTable(f"{g} is not composable with {f}", [g, f])


def category_violations(category: FinCategory, strict_units: bool = True) -> list[Violation]:
    """Law violations of the 1-dimensional structure.

    With ``strict_units`` False only totality and boundaries are checked,
    which is what bicategories need.
    """
    violations = []
    for x in sorted(category.objects):
        f = category.identities.get(x)
        if f is None:
            violations.append(Violation(law="identity missing", cells=[x]))
        elif category.morphisms[f] != (x, x):
            violations.append(Violation(law="identity boundary", cells=[x, f]))

    for g, f in category.composable_pairs():
        h = category.compose(g, f)
        if h is None:
            violations.append(Violation(law="composition total", cells=[g, f]))
        elif category.morphisms[h] != (category.src(f), category.tgt(g)):
            violations.append(Violation(law="composite boundary", cells=[g, f, h]))

    if not strict_units or violations:
        return violations

    for f in sorted(category.morphisms):
        x, y = category.morphisms[f]
        if category.compose(f, category.identity(x)) != f:
            violations.append(Violation(law="right unit", cells=[f]))
        if category.compose(category.identity(y), f) != f:
            violations.append(Violation(law="left unit", cells=[f]))

    for g, f in category.composable_pairs():
        for h in category.hom_from(category.tgt(g)):
            left = category.compose(h, category.compose(g, f))
            right = category.compose(category.compose(h, g), f)
            if left != right:
                violations.append(Violation(law="associativity", cells=[h, g, f]))
    return violations


def validate_category(category: FinCategory) -> ValidationReport:
    """List every violated category law; an empty list means valid.

    Raises:
        MalformedTable: if a table references an unknown id or an incomposable pair.
    """
    check_category_tables(category)
    violations = category_violations(category)
    if violations:
        logging.info(f"Category {category.name!r} has {len(violations)} law violations")
    return ValidationReport(subject=category.name, violations=violations)


def validate_functor(functor: CatFunctor) -> ValidationReport:
    source = functor.source.presentation()
    target = functor.target.presentation()
    violations = check_map(source, target, functor.mapping())
    return ValidationReport(subject=functor.name, violations=violations)


def enumerate_functors(
    source: FinCategory, target: FinCategory, budget: Budget | None = None
) -> Iterator[CatFunctor]:
    for i, mapping in enumerate(
        enumerate_maps(source.presentation(), target.presentation(), budget)
    ):
        yield CatFunctor.from_mapping(source, target, mapping, name=f"F{i}")


def identity_functor(category: FinCategory) -> CatFunctor:
    return CatFunctor(
        name=f"id_{category.name}",
        source=category,
        target=category,
        objects={x: x for x in category.objects},
        morphisms={f: f for f in category.morphisms},
    )


def compose_functors(second: CatFunctor, first: CatFunctor) -> CatFunctor:
    """``second ∘ first``."""
    return CatFunctor(
        name=f"{second.name}.{first.name}",
        source=first.source,
        target=second.target,
        objects={x: second.objects[y] for x, y in first.objects.items()},
        morphisms={f: second.morphisms[g] for f, g in first.morphisms.items()},
    )


class MapsCells(Protocol):
    def mapping(self) -> Mapping: ...


def functor_image(functor: MapsCells) -> dict[str, list[str]]:
    """Target cells hit by a functor or 2-functor, per cell kind."""
    return {kind: sorted(set(table.values())) for kind, table in functor.mapping().items()}


def is_category_equivalence(functor: CatFunctor) -> bool:
    """Essentially surjective, full and faithful, decided by exhaustive scan."""
    source, target = functor.source, functor.target
    for y in sorted(target.objects):
        reachable = any(
            target.inverse(g) is not None
            for x in source.objects
            for g in target.hom(y, functor.objects[x])
        )
        if not reachable:
            logging.debug(f"{functor.name}: object {y} is not essentially in the image")
            return False
    for x, x2 in product(sorted(source.objects), repeat=2):
        images = [functor.morphisms[f] for f in source.hom(x, x2)]
        expected = target.hom(functor.objects[x], functor.objects[x2])
        if sorted(images) != sorted(expected):
            logging.debug(f"{functor.name}: not fully faithful on hom({x}, {x2})")
            return False
    return True


def is_isofibration(functor: CatFunctor) -> bool:
    """Every isomorphism ending at an image object lifts to an isomorphism."""
    source, target = functor.source, functor.target
    for x in sorted(source.objects):
        fx = functor.objects[x]
        for g in sorted(target.morphisms):
            if target.tgt(g) != fx or target.inverse(g) is None:
                continue
            lifted = any(
                functor.morphisms[f] == g and source.inverse(f) is not None
                for f in source.morphisms
                if source.tgt(f) == x
            )
            if not lifted:
                return False
    return True

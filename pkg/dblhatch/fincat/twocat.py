"""
Finite 2-categories and bicategories.

A 2-cell ``θ: f ⇒ g`` between parallel morphisms ``f, g: X -> Y`` is stored
with its source and target morphism. ``vertical_composition`` maps
``(ψ, θ)`` to ``ψ•θ`` (``θ`` first); ``horizontal_composition`` maps
``(ψ, θ)`` to ``ψ∘θ`` where ``θ`` lives on the earlier morphisms.
"""

import logging
from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict

from dblhatch.errors import MalformedTable
from dblhatch.fincat.category import (
    FinCategory,
    category_violations,
    check_category_tables,
)
from dblhatch.utils.search import Budget
from dblhatch.utils.structure import Mapping, Operation, Presentation, check_map, enumerate_maps
from dblhatch.utils.types import ValidationReport, Violation


class TwoCategory(FinCategory):
    cells: dict[str, tuple[str, str]]
    cell_identities: dict[str, str]
    vertical_composition: dict[tuple[str, str], str]
    horizontal_composition: dict[tuple[str, str], str]

    def csrc(self, theta: str) -> str:
        return self.cells[theta][0]

    def ctgt(self, theta: str) -> str:
        return self.cells[theta][1]

    def identity_cell(self, f: str) -> str:
        return self.cell_identities[f]

    def vcomp(self, psi: str, theta: str) -> str | None:
        return self.vertical_composition.get((psi, theta))

    def hcomp(self, psi: str, theta: str) -> str | None:
        return self.horizontal_composition.get((psi, theta))

    def whisker_left(self, g: str, theta: str) -> str | None:
        """``g θ``: postcompose ``θ`` with the morphism ``g``."""
        return self.hcomp(self.identity_cell(g), theta)

    def whisker_right(self, theta: str, f: str) -> str | None:
        """``θ f``: precompose ``θ`` with the morphism ``f``."""
        return self.hcomp(theta, self.identity_cell(f))

    def cells_between(self, f: str, g: str) -> list[str]:
        if "cells_between" not in self._cache:
            index: dict[tuple[str, str], list[str]] = {}
            for theta in sorted(self.cells):
                index.setdefault(self.cells[theta], []).append(theta)
            self._cache["cells_between"] = index
        return self._cache["cells_between"].get((f, g), [])

    def inverse_cell(self, theta: str) -> str | None:
        f, g = self.cells[theta]
        return next(
            (
                psi
                for psi in self.cells_between(g, f)
                if self.vcomp(psi, theta) == self.identity_cell(f)
                and self.vcomp(theta, psi) == self.identity_cell(g)
            ),
            None,
        )

    def is_invertible_cell(self, theta: str) -> bool:
        return self.inverse_cell(theta) is not None

    def find_invertible_cell(self, f: str, g: str) -> str | None:
        """First invertible 2-cell ``f ⇒ g`` in sorted order."""
        return next((theta for theta in self.cells_between(f, g) if self.is_invertible_cell(theta)), None)

    def two_category_operations(self) -> list[Operation]:
        return [
            *self.category_operations(),
            Operation(
                name="csrc",
                args=("cell",),
                result="mor",
                table={(t,): ends[0] for t, ends in self.cells.items()},
                boundary=True,
            ),
            Operation(
                name="ctgt",
                args=("cell",),
                result="mor",
                table={(t,): ends[1] for t, ends in self.cells.items()},
                boundary=True,
            ),
            Operation(
                name="idc",
                args=("mor",),
                result="cell",
                table={(f,): t for f, t in self.cell_identities.items()},
            ),
            Operation(
                name="vcomp",
                args=("cell", "cell"),
                result="cell",
                table=dict(self.vertical_composition),
            ),
            Operation(
                name="hcomp",
                args=("cell", "cell"),
                result="cell",
                table=dict(self.horizontal_composition),
            ),
        ]

    def presentation(self) -> Presentation:
        if "presentation" not in self._cache:
            self._cache["presentation"] = Presentation(
                kinds=("ob", "mor", "cell"),
                cells={
                    "ob": sorted(self.objects),
                    "mor": sorted(self.morphisms),
                    "cell": sorted(self.cells),
                },
                operations=self.two_category_operations(),
            )
        return self._cache["presentation"]


class Bicategory(TwoCategory):
    """A 2-category whose 1-cell composition is associative and unital only
    up to invertible 2-cells.

    ``associators[(f, g, h)]`` is ``(h∘g)∘f ⇒ h∘(g∘f)``;
    ``left_unitors[f]`` is ``id∘f ⇒ f``; ``right_unitors[f]`` is ``f∘id ⇒ f``.
    """

    associators: dict[tuple[str, str, str], str]
    left_unitors: dict[str, str]
    right_unitors: dict[str, str]

    def presentation(self) -> Presentation:
        if "presentation" not in self._cache:
            self._cache["presentation"] = Presentation(
                kinds=("ob", "mor", "cell"),
                cells={
                    "ob": sorted(self.objects),
                    "mor": sorted(self.morphisms),
                    "cell": sorted(self.cells),
                },
                operations=[
                    *self.two_category_operations(),
                    Operation(
                        name="assoc",
                        args=("mor", "mor", "mor"),
                        result="cell",
                        table=dict(self.associators),
                    ),
                    Operation(
                        name="lunit",
                        args=("mor",),
                        result="cell",
                        table={(f,): t for f, t in self.left_unitors.items()},
                    ),
                    Operation(
                        name="runit",
                        args=("mor",),
                        result="cell",
                        table={(f,): t for f, t in self.right_unitors.items()},
                    ),
                ],
            )
        return self._cache["presentation"]


class TwoFunctor(BaseModel):
    """A strict 2-functor; between bicategories it also preserves coherence cells."""

    model_config = ConfigDict(frozen=True)

    name: str = ""
    source: TwoCategory
    target: TwoCategory
    objects: dict[str, str]
    morphisms: dict[str, str]
    cells: dict[str, str]

    def mapping(self) -> Mapping:
        return {"ob": dict(self.objects), "mor": dict(self.morphisms), "cell": dict(self.cells)}

    @classmethod
    def from_mapping(
        cls, source: TwoCategory, target: TwoCategory, mapping: Mapping, name: str = ""
    ) -> "TwoFunctor":
        return cls(
            name=name,
            source=source,
            target=target,
            objects=mapping["ob"],
            morphisms=mapping["mor"],
            cells=mapping["cell"],
        )


class EquivalenceWitness(BaseModel):
    """Equivalence data ``(a, a′, η, ε)``.

    ``unit`` is ``η: id ⇒ a′∘a`` and ``counit`` is ``ε: a∘a′ ⇒ id``, both
    invertible. In a double category they are globular squares.
    """

    model_config = ConfigDict(frozen=True)

    forward: str
    backward: str
    unit: str
    counit: str


def _check_cell_tables(category: TwoCategory) -> None:
    for theta, (f, g) in sorted(category.cells.items()):
        if f not in category.morphisms or g not in category.morphisms:
            raise MalformedTable(f"2-cell {theta} has an unknown boundary", [theta])
    for f, theta in sorted(category.cell_identities.items()):
        if f not in category.morphisms or theta not in category.cells:
            raise MalformedTable(f"identity 2-cell of {f} references unknown ids", [f, theta])
    for (psi, theta), chi in sorted(category.vertical_composition.items()):
        if any(c not in category.cells for c in (psi, theta, chi)):
            raise MalformedTable(f"vertical composite {psi}.{theta} references unknown ids")
        if category.ctgt(theta) != category.csrc(psi):
            raise MalformedTable(f"{psi} is not vertically composable with {theta}", [psi, theta])
    for (psi, theta), chi in sorted(category.horizontal_composition.items()):
        if any(c not in category.cells for c in (psi, theta, chi)):
            raise MalformedTable(f"horizontal composite {psi}*{theta} references unknown ids")
        if category.tgt(category.csrc(theta)) != category.src(category.csrc(psi)):
            raise MalformedTable(f"{psi} is not horizontally composable with {theta}", [psi, theta])


def _vertical_pairs(category: TwoCategory) -> Iterator[tuple[str, str]]:
    for theta in sorted(category.cells):
        g = category.ctgt(theta)
        for h in sorted(category.morphisms):
            for psi in category.cells_between(g, h):
                yield psi, theta


def _horizontal_pairs(category: TwoCategory) -> Iterator[tuple[str, str]]:
    for theta in sorted(category.cells):
        y = category.tgt(category.csrc(theta))
        for psi in sorted(category.cells):
            if category.src(category.csrc(psi)) == y:
                yield psi, theta


def cell_violations(category: TwoCategory, strict_units: bool = True) -> list[Violation]:
    """Laws of the 2-dimensional structure shared by 2-categories and bicategories."""
    violations = []
    for theta, (f, g) in sorted(category.cells.items()):
        if category.morphisms[f] != category.morphisms[g]:
            violations.append(Violation(law="2-cell boundary parallel", cells=[theta]))
    for f in sorted(category.morphisms):
        theta = category.cell_identities.get(f)
        if theta is None:
            violations.append(Violation(law="identity 2-cell missing", cells=[f]))
        elif category.cells[theta] != (f, f):
            violations.append(Violation(law="identity 2-cell boundary", cells=[f, theta]))
    if violations:
        return violations

    for psi, theta in _vertical_pairs(category):
        chi = category.vcomp(psi, theta)
        if chi is None:
            violations.append(Violation(law="vertical composition total", cells=[psi, theta]))
        elif category.cells[chi] != (category.csrc(theta), category.ctgt(psi)):
            violations.append(Violation(law="vertical composite boundary", cells=[psi, theta, chi]))
    for psi, theta in _horizontal_pairs(category):
        chi = category.hcomp(psi, theta)
        expected = (
            category.compose(category.csrc(psi), category.csrc(theta)),
            category.compose(category.ctgt(psi), category.ctgt(theta)),
        )
        if chi is None:
            violations.append(Violation(law="horizontal composition total", cells=[psi, theta]))
        elif category.cells[chi] != expected:
            violations.append(Violation(law="horizontal composite boundary", cells=[psi, theta, chi]))
    if violations:
        return violations

    for theta in sorted(category.cells):
        f, g = category.cells[theta]
        if category.vcomp(theta, category.identity_cell(f)) != theta:
            violations.append(Violation(law="vertical right unit", cells=[theta]))
        if category.vcomp(category.identity_cell(g), theta) != theta:
            violations.append(Violation(law="vertical left unit", cells=[theta]))
        if strict_units:
            x, y = category.morphisms[f]
            if category.hcomp(theta, category.identity_cell(category.identity(x))) != theta:
                violations.append(Violation(law="horizontal right unit", cells=[theta]))
            if category.hcomp(category.identity_cell(category.identity(y)), theta) != theta:
                violations.append(Violation(law="horizontal left unit", cells=[theta]))

    for psi, theta in _vertical_pairs(category):
        for chi in sorted(category.cells):
            if category.csrc(chi) != category.ctgt(psi):
                continue
            left = category.vcomp(chi, category.vcomp(psi, theta))
            right = category.vcomp(category.vcomp(chi, psi), theta)
            if left != right:
                violations.append(Violation(law="vertical associativity", cells=[chi, psi, theta]))

    if strict_units:
        for psi, theta in _horizontal_pairs(category):
            z = category.tgt(category.csrc(psi))
            for chi in sorted(category.cells):
                if category.src(category.csrc(chi)) != z:
                    continue
                left = category.hcomp(chi, category.hcomp(psi, theta))
                right = category.hcomp(category.hcomp(chi, psi), theta)
                if left != right:
                    violations.append(Violation(law="horizontal associativity", cells=[chi, psi, theta]))

    for g, f in category.composable_pairs():
        if category.hcomp(category.identity_cell(g), category.identity_cell(f)) != category.identity_cell(
            category.compose(g, f)
        ):
            violations.append(Violation(law="identity 2-cells compose", cells=[g, f]))

    # interchange: (δ•γ)∘(β•α) = (δ∘β)•(γ∘α)
    for beta, alpha in _vertical_pairs(category):
        y = category.tgt(category.csrc(alpha))
        for delta, gamma in _vertical_pairs(category):
            if category.src(category.csrc(gamma)) != y:
                continue
            left = category.hcomp(category.vcomp(delta, gamma), category.vcomp(beta, alpha))
            right = category.vcomp(category.hcomp(delta, beta), category.hcomp(gamma, alpha))
            if left != right:
                violations.append(Violation(law="interchange", cells=[delta, gamma, beta, alpha]))
    return violations


def validate_2category(category: TwoCategory) -> ValidationReport:
    """Unit, associativity and interchange laws; empty report means valid.

    Raises:
        MalformedTable: if a table references unknown ids or incomposable cells.
    """
    check_category_tables(category)
    _check_cell_tables(category)
    violations = category_violations(category)
    if not violations:
        violations = cell_violations(category)
    if violations:
        logging.info(f"2-category {category.name!r} has {len(violations)} law violations")
    return ValidationReport(subject=category.name, violations=violations)


def validate_bicategory(category: Bicategory) -> ValidationReport:
    """Bicategory laws: 2-cell laws, invertible coherence cells with the right
    boundaries, pentagon, triangle and naturality of associators and unitors."""
    check_category_tables(category)
    _check_cell_tables(category)
    violations = category_violations(category, strict_units=False)
    if not violations:
        violations = cell_violations(category, strict_units=False)
    if violations:
        return ValidationReport(subject=category.name, violations=violations)

    compose = category.compose
    for g, f in category.composable_pairs():
        for h in category.hom_from(category.tgt(g)):
            alpha = category.associators.get((f, g, h))
            expected = (compose(compose(h, g), f), compose(h, compose(g, f)))
            if alpha is None or category.cells[alpha] != expected or not category.is_invertible_cell(alpha):
                violations.append(Violation(law="associator", cells=[f, g, h]))
    for f in sorted(category.morphisms):
        x, y = category.morphisms[f]
        lam = category.left_unitors.get(f)
        rho = category.right_unitors.get(f)
        if lam is None or category.cells[lam] != (compose(category.identity(y), f), f) or not category.is_invertible_cell(lam):
            violations.append(Violation(law="left unitor", cells=[f]))
        if rho is None or category.cells[rho] != (compose(f, category.identity(x)), f) or not category.is_invertible_cell(rho):
            violations.append(Violation(law="right unitor", cells=[f]))
    if violations:
        return ValidationReport(subject=category.name, violations=violations)

    def assoc(f: str, g: str, h: str) -> str:
        return category.associators[(f, g, h)]

    idc = category.identity_cell
    hcomp, vcomp = category.hcomp, category.vcomp
    for g, f in category.composable_pairs():
        for h in category.hom_from(category.tgt(g)):
            for k in category.hom_from(category.tgt(h)):
                left = vcomp(assoc(compose(g, f), h, k), assoc(f, g, compose(k, h)))
                right = vcomp(
                    hcomp(idc(k), assoc(f, g, h)),
                    vcomp(assoc(f, compose(h, g), k), hcomp(assoc(g, h, k), idc(f))),
                )
                if left is None or left != right:
                    violations.append(Violation(law="pentagon", cells=[f, g, h, k]))
        y = category.tgt(f)
        identity = category.identity(y)
        left = vcomp(hcomp(idc(g), category.left_unitors[f]), assoc(f, identity, g))
        right = hcomp(category.right_unitors[g], idc(f))
        if left is None or left != right:
            violations.append(Violation(law="triangle", cells=[f, g]))

    for theta in sorted(category.cells):
        f, f2 = category.cells[theta]
        x, y = category.morphisms[f]
        lam_left = vcomp(category.left_unitors[f2], hcomp(idc(category.identity(y)), theta))
        if lam_left != vcomp(theta, category.left_unitors[f]):
            violations.append(Violation(law="left unitor naturality", cells=[theta]))
        rho_left = vcomp(category.right_unitors[f2], hcomp(theta, idc(category.identity(x))))
        if rho_left != vcomp(theta, category.right_unitors[f]):
            violations.append(Violation(law="right unitor naturality", cells=[theta]))
    for psi, theta in _horizontal_pairs(category):
        for chi in sorted(category.cells):
            if category.src(category.csrc(chi)) != category.tgt(category.csrc(psi)):
                continue
            tops = (category.csrc(theta), category.csrc(psi), category.csrc(chi))
            bottoms = (category.ctgt(theta), category.ctgt(psi), category.ctgt(chi))
            left = vcomp(assoc(*bottoms), hcomp(hcomp(chi, psi), theta))
            right = vcomp(hcomp(chi, hcomp(psi, theta)), assoc(*tops))
            if left != right:
                violations.append(Violation(law="associator naturality", cells=[theta, psi, chi]))
    return ValidationReport(subject=category.name, violations=violations)


def validate_2functor(functor: TwoFunctor) -> ValidationReport:
    violations = check_map(functor.source.presentation(), functor.target.presentation(), functor.mapping())
    return ValidationReport(subject=functor.name, violations=violations)


def enumerate_2functors(
    source: TwoCategory, target: TwoCategory, budget: Budget | None = None
) -> Iterator[TwoFunctor]:
    for i, mapping in enumerate(enumerate_maps(source.presentation(), target.presentation(), budget)):
        yield TwoFunctor.from_mapping(source, target, mapping, name=f"F{i}")


def identity_2functor(category: TwoCategory) -> TwoFunctor:
    return TwoFunctor(
        name=f"id_{category.name}",
        source=category,
        target=category,
        objects={x: x for x in category.objects},
        morphisms={f: f for f in category.morphisms},
        cells={t: t for t in category.cells},
    )


def compose_2functors(second: TwoFunctor, first: TwoFunctor) -> TwoFunctor:
    return TwoFunctor(
        name=f"{second.name}.{first.name}",
        source=first.source,
        target=second.target,
        objects={x: second.objects[y] for x, y in first.objects.items()},
        morphisms={f: second.morphisms[g] for f, g in first.morphisms.items()},
        cells={t: second.cells[s] for t, s in first.cells.items()},
    )


def is_equivalence_morphism(category: TwoCategory, f: str) -> EquivalenceWitness | None:
    """First equivalence witness ``(f, g, η, ε)`` in sorted order, or None."""
    x, y = category.morphisms[f]
    for g in category.hom(y, x):
        eta = category.find_invertible_cell(category.identity(x), category.compose(g, f))
        if eta is None:
            continue
        epsilon = category.find_invertible_cell(category.compose(f, g), category.identity(y))
        if epsilon is not None:
            return EquivalenceWitness(forward=f, backward=g, unit=eta, counit=epsilon)
    return None

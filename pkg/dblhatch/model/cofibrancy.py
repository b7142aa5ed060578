"""
Cofibrant double categories and necessary conditions on cofibrations.
"""

import logging

from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.fincat.free import is_disjoint_union_1_2, is_free_category
from dblhatch.utils.types import CheckReport, Counterexample, FreenessReport

COFIBRANT = "cofibrant"
NOT_COFIBRANT = "not cofibrant"


class CofibrancyReport(BaseModel):
    """A double category is cofibrant iff its underlying horizontal category is
    free and its underlying vertical category is a disjoint union of 𝟙 and 𝟚."""

    model_config = ConfigDict(frozen=True)

    subject: str = ""
    horizontal: FreenessReport
    vertical_disjoint_union: bool
    verdict: str

    @property
    def cofibrant(self) -> bool:
        return self.verdict == COFIBRANT


def is_cofibrant(A: DoubleCategory) -> CofibrancyReport:
    horizontal = is_free_category(A.horizontal_category())
    vertical = is_disjoint_union_1_2(A.vertical_category())
    verdict = COFIBRANT if horizontal.free and vertical else NOT_COFIBRANT
    logging.debug(f"{A.name}: horizontal free={horizontal.free}, vertical 1/2 union={vertical}")
    return CofibrancyReport(
        subject=A.name, horizontal=horizontal, vertical_disjoint_union=vertical, verdict=verdict
    )


def _injective(mapping: dict[str, str]) -> list[str] | None:
    seen: dict[str, str] = {}
    for cell, image in sorted(mapping.items()):
        if image in seen:
            return [seen[image], cell, image]
        seen[image] = cell
    return None


def _faithful(F: DoubleFunctor, kind: str) -> list[str] | None:
    """First pair of parallel cells of ``kind`` with the same image."""
    A = F.source
    table, images = (A.hmors, F.hmors) if kind == "h" else (A.vmors, F.vmors)
    seen: dict[tuple, str] = {}
    for cell in sorted(table):
        key = (table[cell], images[cell])
        if key in seen:
            return [seen[key], cell, images[cell]]
        seen[key] = cell
    return None


def cofibration_necessary_conditions(F: DoubleFunctor) -> CheckReport:
    """Injectivity on objects and faithfulness on horizontal and vertical
    morphisms. Passing does not make ``F`` a cofibration."""
    results = {}
    for tag, found, missing in (
        ("injective on objects", _injective(F.objects), "two objects share an image"),
        ("faithful on horizontal morphisms", _faithful(F, "h"), "parallel horizontal morphisms share an image"),
        ("faithful on vertical morphisms", _faithful(F, "v"), "parallel vertical morphisms share an image"),
    ):
        results[tag] = Counterexample(cells=found, missing=missing) if found is not None else None
    notes = ["necessary conditions only; squares are not tested"]
    if _injective(F.squares) is not None:
        notes.append("not injective on squares")
    return CheckReport.from_results(F.name, results, notes)

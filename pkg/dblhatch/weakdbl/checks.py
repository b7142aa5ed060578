"""
Cofibrancy and double biequivalences for weak double categories.
"""

import logging

import networkx as nx

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.fincat.biequivalence import check_biequivalence
from dblhatch.fincat.free import is_disjoint_union_1_2
from dblhatch.model.cofibrancy import CofibrancyReport
from dblhatch.model.conditions import check_double_biequivalence
from dblhatch.utils.types import CheckReport, Counterexample, FreenessReport
from dblhatch.weakdbl.double import WeakDoubleCategory, as_weak
from dblhatch.weakdbl.embed import underlying_horizontal_weak_functor, vertical_morphism_bicat_functor

COFIBRANT_SUFFICIENT = "cofibrant (sufficient test)"
UNKNOWN = "unknown"


def _strict_unit_failure(B: WeakDoubleCategory) -> str | None:
    for a in sorted(B.hmors):
        x, y = B.hmors[a]
        if B.hcomp(a, B.hid(x)) != a or B.hcomp(B.hid(y), a) != a:
            return a
        if B.left_unitor(a) != B.e_square(a) or B.right_unitor(a) != B.e_square(a):
            return a
    return None


def is_free_magma(B: WeakDoubleCategory) -> FreenessReport:
    """Strict units, at most one splitting of each morphism into two
    non-identities, and no morphism among its own iterated factors."""
    failed = _strict_unit_failure(B)
    if failed is not None:
        return FreenessReport(free=False, reason="horizontal units are not strict", counterexample=[failed])

    splittings: dict[str, list[tuple[str, str]]] = {}
    for b, a in B.hcomposable_pairs():
        if B.is_hidentity(a) or B.is_hidentity(b):
            continue
        c = B.hcomp(b, a)
        if B.is_hidentity(c):
            return FreenessReport(
                free=False, reason="two non-identities compose to an identity", counterexample=[b, a]
            )
        splittings.setdefault(c, []).append((b, a))
    generators = [a for a in sorted(B.hmors) if not B.is_hidentity(a) and a not in splittings]
    for c, pairs in sorted(splittings.items()):
        if len(pairs) > 1:
            return FreenessReport(
                free=False, generators=generators, reason=f"{c} has two splittings", counterexample=[c]
            )

    graph = nx.DiGraph()
    for c, [(b, a)] in splittings.items():
        graph.add_edges_from([(c, b), (c, a)])
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        return FreenessReport(
            free=False,
            generators=generators,
            reason="a morphism is among its own factors",
            counterexample=[edge[0] for edge in cycle],
        )
    return FreenessReport(free=True, generators=generators)


def is_cofibrant_weak(B: DoubleCategory) -> CofibrancyReport:
    """Sufficient test only: a passing input is cofibrant, a failing one is
    reported as unknown."""
    B = as_weak(B)
    horizontal = is_free_magma(B)
    vertical = is_disjoint_union_1_2(B.vertical_category())
    verdict = COFIBRANT_SUFFICIENT if horizontal.free and vertical else UNKNOWN
    logging.debug(f"{B.name}: free horizontal magma={horizontal.free}, vertical 1/2 union={vertical}")
    return CofibrancyReport(
        subject=B.name, horizontal=horizontal, vertical_disjoint_union=vertical, verdict=verdict
    )


def weak_reformulated_conditions(F: DoubleFunctor) -> dict[str, Counterexample | None]:
    """hb3 from 𝐇^w F, vb2 and vb3 from 𝒱^w F."""
    horizontal = check_biequivalence(underlying_horizontal_weak_functor(F))
    vertical = check_biequivalence(vertical_morphism_bicat_functor(F))
    return {
        "hb3": horizontal.counterexamples.get("b3"),
        "vb2": vertical.counterexamples.get("b2"),
        "vb3": vertical.counterexamples.get("b3"),
    }


def check_double_biequivalence_weak(F: DoubleFunctor, with_reformulations: bool = False) -> CheckReport:
    """db1-db4 for a strict double functor between weak double categories.

    Equivalence data and weak inverses only involve binary composites, so
    the strict scans apply to the weak tables unchanged.
    """
    report = check_double_biequivalence(F)
    if not with_reformulations:
        return report.model_copy(update={"notes": [*report.notes, "weak setting"]})
    extra = CheckReport.from_results(F.name, weak_reformulated_conditions(F))
    return CheckReport(
        subject=report.subject,
        verdicts=report.verdicts | extra.verdicts,
        counterexamples=report.counterexamples | extra.counterexamples,
        notes=[*report.notes, "weak setting"],
    )

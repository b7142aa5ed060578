"""
Lifting problems

    A --top--> X
    |i         |p
    B --bot--> Y

solved by constrained enumeration of double functors ``B -> X``, and the
right lifting property against the finite generating sets.
"""

import logging
from collections.abc import Iterator

from dblhatch.dblcore.functor import DoubleFunctor, compose_double_functors, enumerate_double_functors
from dblhatch.errors import InternalInconsistency, PreconditionFailed
from dblhatch.model.generators import generating_cofibrations, j2
from dblhatch.utils.search import Budget, ensure_budget
from dblhatch.utils.structure import Mapping
from dblhatch.utils.types import CheckReport, Counterexample


def _preimages(p: DoubleFunctor) -> dict[str, dict[str, set[str]]]:
    index: dict[str, dict[str, set[str]]] = {}
    for kind, table in p.mapping().items():
        kinds = index.setdefault(kind, {})
        for cell, image in table.items():
            kinds.setdefault(image, set()).add(cell)
    return index


def _commutes(i: DoubleFunctor, p: DoubleFunctor, top: DoubleFunctor, bottom: DoubleFunctor) -> bool:
    left = compose_double_functors(p, top).mapping()
    right = compose_double_functors(bottom, i).mapping()
    return left == right


def solve_lifting(
    i: DoubleFunctor,
    p: DoubleFunctor,
    top: DoubleFunctor,
    bottom: DoubleFunctor,
    budget: Budget | None = None,
) -> DoubleFunctor | None:
    """A diagonal ``L: B -> X`` with ``L∘i = top`` and ``p∘L = bottom``, or None.

    Raises:
        PreconditionFailed: if the square does not commute.
        BudgetExceeded: if the search visits more nodes than allowed.
    """
    if not _commutes(i, p, top, bottom):
        raise PreconditionFailed("commuting square", f"{p.name}.{top.name} != {bottom.name}.{i.name}")

    over = _preimages(p)
    fixed: dict[str, dict[str, set[str]]] = {}
    i_map, top_map, bottom_map = i.mapping(), top.mapping(), bottom.mapping()
    for kind, table in i_map.items():
        for cell, image in table.items():
            fixed.setdefault(kind, {}).setdefault(image, set()).add(top_map[kind][cell])

    # L∘i = top pins each cell of B to one image; two different pins cannot both hold
    clash = next(
        ((kind, cell) for kind, pins in fixed.items() for cell, images in sorted(pins.items()) if len(images) > 1),
        None,
    )
    if clash is not None:
        logging.debug(f"No lift of {i.name} against {p.name}: {clash[0]} {clash[1]} is pinned twice by {top.name}")
        return None

    def restrict(kind: str, cell: str) -> set[str]:
        allowed = over.get(kind, {}).get(bottom_map[kind][cell], set())
        pinned = fixed.get(kind, {}).get(cell)
        return allowed & pinned if pinned is not None else allowed

    lift = next(enumerate_double_functors(i.target, p.source, budget, restrict=restrict), None)
    if lift is None:
        logging.debug(f"No lift of {i.name} against {p.name} for ({top.name}, {bottom.name})")
        return None
    if compose_double_functors(lift, i).mapping() != top_map:
        raise InternalInconsistency(f"lift of {i.name} against {p.name} does not restrict to {top.name}")
    return lift.model_copy(update={"name": "lift"})


def lifting_problems(
    i: DoubleFunctor, p: DoubleFunctor, budget: Budget | None = None
) -> Iterator[tuple[DoubleFunctor, DoubleFunctor]]:
    """Every commuting square ``(top, bottom)`` from ``i`` to ``p``."""
    budget = ensure_budget(budget)
    over = _preimages(p)
    i_map = i.mapping()
    for bottom in enumerate_double_functors(i.target, p.target, budget):
        bottom_map: Mapping = bottom.mapping()

        def restrict(kind: str, cell: str, bottom_map=bottom_map) -> set[str]:
            return over.get(kind, {}).get(bottom_map[kind][i_map[kind][cell]], set())

        for top in enumerate_double_functors(i.source, p.source, budget, restrict=restrict):
            yield top, bottom


def _first_unliftable(i: DoubleFunctor, p: DoubleFunctor, budget: Budget) -> Counterexample | None:
    for top, bottom in lifting_problems(i, p, budget):
        if solve_lifting(i, p, top, bottom, budget) is None:
            cells = [
                f"{cell}->{image}"
                for table in bottom.mapping().values()
                for cell, image in sorted(table.items())
            ]
            return Counterexample(cells=cells, missing=f"no lift of {i.name}")
    return None


def rlp_report(
    p: DoubleFunctor, generators: list[DoubleFunctor], budget: Budget | None = None
) -> CheckReport:
    """One verdict per generator: does ``p`` lift against it?"""
    budget = ensure_budget(budget)
    results = {i.name: _first_unliftable(i, p, budget) for i in generators}
    report = CheckReport.from_results(p.name, results)
    logging.info(f"{p.name}: lifts against {sum(report.verdicts.values())}/{len(generators)} generators")
    return report


def has_rlp_generating_cofibrations(p: DoubleFunctor, budget: Budget | None = None) -> bool:
    """Right lifting property against I1-I5; equivalent to ``p`` being a
    double trivial fibration."""
    return rlp_report(p, generating_cofibrations(), budget).passed


def has_rlp_j2(p: DoubleFunctor, budget: Budget | None = None) -> bool:
    """Right lifting property against ℍ𝟚 -> ℍC_inv; every double fibration has it."""
    return rlp_report(p, [j2()], budget).passed

"""
Biequivalences and Lack fibrations of 2-functors, decided by exhaustive scan.
"""

import logging
from itertools import product

from dblhatch.fincat.twocat import TwoFunctor, is_equivalence_morphism
from dblhatch.utils.types import CheckReport, Counterexample


def _report(functor: TwoFunctor, results: dict[str, Counterexample | None]) -> CheckReport:
    report = CheckReport.from_results(functor.name, results)
    if not report.passed:
        logging.info(f"{functor.name}: failed {', '.join(report.failed())}")
    return report


def _b1(functor: TwoFunctor) -> Counterexample | None:
    source, target = functor.source, functor.target
    for y in sorted(target.objects):
        found = any(
            is_equivalence_morphism(target, b) is not None
            for x in sorted(source.objects)
            for b in target.hom(y, functor.objects[x])
        )
        if not found:
            return Counterexample(cells=[y], missing="no equivalence into the image")
    return None


def _b2(functor: TwoFunctor) -> Counterexample | None:
    source, target = functor.source, functor.target
    for x, z in product(sorted(source.objects), repeat=2):
        for b in target.hom(functor.objects[x], functor.objects[z]):
            found = any(
                target.find_invertible_cell(b, functor.morphisms[a]) is not None
                for a in source.hom(x, z)
            )
            if not found:
                return Counterexample(cells=[x, z, b], missing="no morphism with an invertible 2-cell to it")
    return None


def _b3(functor: TwoFunctor) -> Counterexample | None:
    source, target = functor.source, functor.target
    for x, z in product(sorted(source.objects), repeat=2):
        for a, a2 in product(source.hom(x, z), repeat=2):
            preimages: dict[str, list[str]] = {}
            for alpha in source.cells_between(a, a2):
                preimages.setdefault(functor.cells[alpha], []).append(alpha)
            for beta in target.cells_between(functor.morphisms[a], functor.morphisms[a2]):
                found = preimages.get(beta, [])
                if len(found) != 1:
                    return Counterexample(
                        cells=[a, a2, beta, *found],
                        missing=f"{len(found)} preimages instead of exactly one",
                    )
    return None


def check_biequivalence(functor: TwoFunctor) -> CheckReport:
    """Conditions b1 (essentially surjective up to equivalence), b2 (full up
    to invertible 2-cell) and b3 (fully faithful on 2-cells)."""
    return _report(functor, {"b1": _b1(functor), "b2": _b2(functor), "b3": _b3(functor)})


def _f1(functor: TwoFunctor) -> Counterexample | None:
    source, target = functor.source, functor.target
    for z in sorted(source.objects):
        for b in sorted(target.morphisms):
            if target.tgt(b) != functor.objects[z] or is_equivalence_morphism(target, b) is None:
                continue
            lifted = any(
                functor.morphisms[a] == b and is_equivalence_morphism(source, a) is not None
                for a in sorted(source.morphisms)
                if source.tgt(a) == z
            )
            if not lifted:
                return Counterexample(cells=[z, b], missing="equivalence has no equivalence lift")
    return None


def _f2(functor: TwoFunctor) -> Counterexample | None:
    source, target = functor.source, functor.target
    for c in sorted(source.morphisms):
        fc = functor.morphisms[c]
        for beta in sorted(target.cells):
            if target.ctgt(beta) != fc or not target.is_invertible_cell(beta):
                continue
            lifted = any(
                functor.cells[alpha] == beta and source.is_invertible_cell(alpha)
                for alpha in sorted(source.cells)
                if source.ctgt(alpha) == c
            )
            if not lifted:
                return Counterexample(cells=[c, beta], missing="invertible 2-cell has no invertible lift")
    return None


def check_lack_fibration(functor: TwoFunctor) -> CheckReport:
    """Conditions f1 (equivalences into the image lift) and f2 (invertible
    2-cells into the image lift)."""
    return _report(functor, {"f1": _f1(functor), "f2": _f2(functor)})

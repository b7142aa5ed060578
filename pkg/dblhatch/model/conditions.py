"""
Double biequivalences, double fibrations and double trivial fibrations,
decided condition by condition by exhaustive scan.

Report keys are the condition tags db1-db4, df1-df3 and dt1-dt4. The
reformulated conditions hb3, vb2 and vb3 are read off the 2-categorical
checks of 𝐇F and 𝒱F.
"""

import logging
from collections.abc import Iterator
from itertools import product

from dblhatch.construct.embed import underlying_horizontal_functor
from dblhatch.construct.vertical import vertical_morphism_functor
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.equiv.equivalence import is_horizontal_equivalence
from dblhatch.equiv.weak_inverse import is_weakly_horizontally_invertible
from dblhatch.fincat.biequivalence import check_biequivalence
from dblhatch.utils.types import CheckReport, Counterexample

Frame = tuple[str, str, str, str]


def _report(F: DoubleFunctor, results: dict[str, Counterexample | None]) -> CheckReport:
    report = CheckReport.from_results(F.name, results)
    if not report.passed:
        logging.info(f"{F.name}: failed {', '.join(report.failed())}")
    return report


def frames(A: DoubleCategory) -> Iterator[Frame]:
    """Every boundary ``(top, bottom, left, right)`` a square of ``A`` could have."""
    for u, v in product(sorted(A.vmors), repeat=2):
        for a in A.hom_h(A.vsrc(u), A.vsrc(v)):
            for c in A.hom_h(A.vtgt(u), A.vtgt(v)):
                yield a, c, u, v


def image_frame(F: DoubleFunctor, frame: Frame) -> Frame:
    a, c, u, v = frame
    return F.hmors[a], F.hmors[c], F.vmors[u], F.vmors[v]


def _invertible_globular(A: DoubleCategory, top: str, bottom: str) -> bool:
    return any(A.vertical_inverse(s) is not None for s in A.globular_squares(top, bottom))


def _db1(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    for y in sorted(B.objects):
        found = any(
            is_horizontal_equivalence(B, b)
            for x in sorted(A.objects)
            for b in B.hom_h(y, F.objects[x])
        )
        if not found:
            return Counterexample(cells=[y], missing="no horizontal equivalence into the image")
    return None


def _db2(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    for x, z in product(sorted(A.objects), repeat=2):
        for b in B.hom_h(F.objects[x], F.objects[z]):
            if not any(_invertible_globular(B, b, F.hmors[a]) for a in A.hom_h(x, z)):
                return Counterexample(
                    cells=[x, z, b], missing="no vertically invertible square onto an image"
                )
    return None


def _db3(F: DoubleFunctor) -> Counterexample | None:
    B = F.target
    images = set(F.vmors.values())
    for v in sorted(B.vmors):
        if not any(
            B.right(alpha) in images and is_weakly_horizontally_invertible(B, alpha)
            for alpha in B.squares_with_left(v)
        ):
            return Counterexample(
                cells=[v], missing="no weakly horizontally invertible square onto an image"
            )
    return None


def _unique_preimages(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    for frame in frames(A):
        preimages: dict[str, list[str]] = {}
        for alpha in A.squares_with(*frame):
            preimages.setdefault(F.squares[alpha], []).append(alpha)
        for beta in B.squares_with(*image_frame(F, frame)):
            found = preimages.get(beta, [])
            if len(found) != 1:
                return Counterexample(
                    cells=[*frame, beta, *found],
                    missing=f"{len(found)} preimages instead of exactly one",
                )
    return None


def _df1(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    for z in sorted(A.objects):
        for b in sorted(B.hmors):
            if B.htgt(b) != F.objects[z] or not is_horizontal_equivalence(B, b):
                continue
            lifted = any(
                F.hmors[a] == b and is_horizontal_equivalence(A, a)
                for a in sorted(A.hmors)
                if A.htgt(a) == z
            )
            if not lifted:
                return Counterexample(cells=[z, b], missing="horizontal equivalence has no equivalence lift")
    return None


def _df2(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    for c in sorted(A.hmors):
        fc = F.hmors[c]
        for beta in sorted(B.squares):
            if not B.is_globular(beta) or B.bottom(beta) != fc or B.vertical_inverse(beta) is None:
                continue
            lifted = any(
                F.squares[alpha] == beta
                and A.is_globular(alpha)
                and A.bottom(alpha) == c
                and A.vertical_inverse(alpha) is not None
                for alpha in sorted(A.squares)
            )
            if not lifted:
                return Counterexample(cells=[c, beta], missing="vertically invertible square has no invertible lift")
    return None


def _df3(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    by_right: dict[str, list[str]] = {}
    for alpha in sorted(A.squares):
        by_right.setdefault(A.right(alpha), []).append(alpha)
    for u in sorted(A.vmors):
        fu = F.vmors[u]
        for beta in sorted(B.squares):
            if B.right(beta) != fu or not is_weakly_horizontally_invertible(B, beta):
                continue
            lifted = any(
                F.squares[alpha] == beta and is_weakly_horizontally_invertible(A, alpha)
                for alpha in by_right.get(u, [])
            )
            if not lifted:
                return Counterexample(
                    cells=[u, beta], missing="weakly horizontally invertible square has no such lift"
                )
    return None


def _dt1(F: DoubleFunctor) -> Counterexample | None:
    images = set(F.objects.values())
    missing = [y for y in sorted(F.target.objects) if y not in images]
    return Counterexample(cells=missing[:1], missing="object outside the image") if missing else None


def _dt2(F: DoubleFunctor) -> Counterexample | None:
    A, B = F.source, F.target
    for x, z in product(sorted(A.objects), repeat=2):
        images = {F.hmors[a] for a in A.hom_h(x, z)}
        for b in B.hom_h(F.objects[x], F.objects[z]):
            if b not in images:
                return Counterexample(cells=[x, z, b], missing="horizontal morphism has no preimage")
    return None


def _dt3(F: DoubleFunctor) -> Counterexample | None:
    images = set(F.vmors.values())
    missing = [v for v in sorted(F.target.vmors) if v not in images]
    return Counterexample(cells=missing[:1], missing="vertical morphism has no preimage") if missing else None


def reformulated_conditions(F: DoubleFunctor) -> dict[str, Counterexample | None]:
    """hb3 from 𝐇F, vb2 and vb3 from 𝒱F."""
    horizontal = check_biequivalence(underlying_horizontal_functor(F))
    vertical = check_biequivalence(vertical_morphism_functor(F))
    return {
        "hb3": horizontal.counterexamples.get("b3"),
        "vb2": vertical.counterexamples.get("b2"),
        "vb3": vertical.counterexamples.get("b3"),
    }


def check_double_biequivalence(F: DoubleFunctor, with_reformulations: bool = False) -> CheckReport:
    """Conditions db1-db4; hb3, vb2 and vb3 as well when asked for."""
    results = {"db1": _db1(F), "db2": _db2(F), "db3": _db3(F), "db4": _unique_preimages(F)}
    if with_reformulations:
        results |= reformulated_conditions(F)
    return _report(F, results)


def check_double_fibration(F: DoubleFunctor) -> CheckReport:
    return _report(F, {"df1": _df1(F), "df2": _df2(F), "df3": _df3(F)})


def check_double_trivial_fibration(F: DoubleFunctor) -> CheckReport:
    return _report(
        F, {"dt1": _dt1(F), "dt2": _dt2(F), "dt3": _dt3(F), "dt4": _unique_preimages(F)}
    )

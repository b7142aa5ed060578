"""
Finite weak double categories: vertical structure strict, horizontal
composition associative and unital up to vertically invertible globular
squares.

``associators[(a, b, c)]`` is ``(c∘b)∘a ⇒ c∘(b∘a)``; ``left_unitors[a]``
is ``id∘a ⇒ a`` and ``right_unitors[a]`` is ``a∘id ⇒ a``. Strict double
functors between weak double categories preserve all three tables.
"""

import logging
from collections.abc import Iterator

from pydantic import Field

from dblhatch.dblcore.double import DoubleCategory, check_double_tables, double_violations
from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.errors import MalformedTable
from dblhatch.utils.structure import Operation, Presentation
from dblhatch.utils.types import ValidationReport, Violation


class WeakDoubleCategory(DoubleCategory):
    associators: dict[tuple[str, str, str], str] = Field(default_factory=dict)
    left_unitors: dict[str, str] = Field(default_factory=dict)
    right_unitors: dict[str, str] = Field(default_factory=dict)

    def associator(self, a: str, b: str, c: str) -> str | None:
        return self.associators.get((a, b, c))

    def left_unitor(self, a: str) -> str | None:
        return self.left_unitors.get(a)

    def right_unitor(self, a: str) -> str | None:
        return self.right_unitors.get(a)

    def hcomposable_triples(self) -> Iterator[tuple[str, str, str]]:
        """``(a, b, c)`` with ``c∘b∘a`` defined, ``a`` first."""
        for b, a in self.hcomposable_pairs():
            for c in self.hmors_from(self.htgt(b)):
                yield a, b, c

    def presentation(self) -> Presentation:
        if "presentation" not in self._cache:
            self._cache["presentation"] = Presentation(
                kinds=("ob", "h", "v", "sq"),
                cells={
                    "ob": sorted(self.objects),
                    "h": sorted(self.hmors),
                    "v": sorted(self.vmors),
                    "sq": sorted(self.squares),
                },
                operations=[
                    *self.double_operations(),
                    Operation(name="assoc", args=("h", "h", "h"), result="sq", table=dict(self.associators)),
                    Operation(
                        name="lunit",
                        args=("h",),
                        result="sq",
                        table={(a,): s for a, s in self.left_unitors.items()},
                    ),
                    Operation(
                        name="runit",
                        args=("h",),
                        result="sq",
                        table={(a,): s for a, s in self.right_unitors.items()},
                    ),
                ],
            )
        return self._cache["presentation"]


def as_weak(A: DoubleCategory) -> WeakDoubleCategory:
    """A strict double category with identity associators and unitors."""
    if isinstance(A, WeakDoubleCategory):
        return A
    associators = {}
    for b, a in A.hcomposable_pairs():
        for c in A.hmors_from(A.htgt(b)):
            associators[(a, b, c)] = A.e_square(A.hcomp(c, A.hcomp(b, a)))
    unitors = {a: A.e_square(a) for a in A.hmors}
    return WeakDoubleCategory(
        **dict(A), associators=associators, left_unitors=unitors, right_unitors=dict(unitors)
    )


def strict_functor_as_weak(F: DoubleFunctor) -> DoubleFunctor:
    return DoubleFunctor(**{**dict(F), "source": as_weak(F.source), "target": as_weak(F.target)})


def check_weak_tables(B: WeakDoubleCategory) -> None:
    """Raise MalformedTable for coherence entries naming unknown ids."""
    check_double_tables(B)
    for (a, b, c), s in sorted(B.associators.items()):
        if any(m not in B.hmors for m in (a, b, c)) or s not in B.squares:
            raise MalformedTable(f"associator for ({a},{b},{c}) references unknown ids", [a, b, c, s])
    for label, table in (("left unitor", B.left_unitors), ("right unitor", B.right_unitors)):
        for a, s in sorted(table.items()):
            if a not in B.hmors or s not in B.squares:
                raise MalformedTable(f"{label} of {a} references unknown ids", [a, s])


def _invertible_globular(B: WeakDoubleCategory, s: str | None, top: str | None, bottom: str | None) -> bool:
    if s is None or top is None or bottom is None:
        return False
    return s in B.globular_squares(top, bottom) and B.vertical_inverse(s) is not None


def _coherence_cell_violations(B: WeakDoubleCategory) -> list[Violation]:
    violations = []
    for a, b, c in B.hcomposable_triples():
        top = B.hcomp(B.hcomp(c, b), a)
        bottom = B.hcomp(c, B.hcomp(b, a))
        if not _invertible_globular(B, B.associator(a, b, c), top, bottom):
            violations.append(Violation(law="associator", cells=[a, b, c]))
    for a in sorted(B.hmors):
        x, y = B.hmors[a]
        if not _invertible_globular(B, B.left_unitor(a), B.hcomp(B.hid(y), a), a):
            violations.append(Violation(law="left unitor", cells=[a]))
        if not _invertible_globular(B, B.right_unitor(a), B.hcomp(a, B.hid(x)), a):
            violations.append(Violation(law="right unitor", cells=[a]))
    return violations


def _coherence_violations(B: WeakDoubleCategory) -> list[Violation]:
    violations = []
    assoc, e = B.associator, B.e_square
    hcomp, vcomp = B.hcomp_sq, B.vcomp_sq

    for a, b, c in B.hcomposable_triples():
        for d in B.hmors_from(B.htgt(c)):
            left = vcomp(assoc(B.hcomp(b, a), c, d), assoc(a, b, B.hcomp(d, c)))
            right = vcomp(
                hcomp(e(d), assoc(a, b, c)),
                vcomp(assoc(a, B.hcomp(c, b), d), hcomp(assoc(b, c, d), e(a))),
            )
            if left is None or left != right:
                violations.append(Violation(law="pentagon", cells=[a, b, c, d]))
    for b, a in B.hcomposable_pairs():
        identity = B.hid(B.htgt(a))
        left = vcomp(hcomp(e(b), B.left_unitor(a)), assoc(a, identity, b))
        if left is None or left != hcomp(B.right_unitor(b), e(a)):
            violations.append(Violation(law="triangle", cells=[a, b]))

    for theta in sorted(B.squares):
        a, a2, u, v = B.squares[theta]
        lam = vcomp(B.left_unitor(a2), hcomp(B.id_square(v), theta))
        if lam is None or lam != vcomp(theta, B.left_unitor(a)):
            violations.append(Violation(law="left unitor naturality", cells=[theta]))
        rho = vcomp(B.right_unitor(a2), hcomp(theta, B.id_square(u)))
        if rho is None or rho != vcomp(theta, B.right_unitor(a)):
            violations.append(Violation(law="right unitor naturality", cells=[theta]))
    for psi, theta in B.square_hpairs():
        for chi in B.squares_with_left(B.right(psi)):
            tops = (B.top(theta), B.top(psi), B.top(chi))
            bottoms = (B.bottom(theta), B.bottom(psi), B.bottom(chi))
            left = vcomp(assoc(*bottoms), hcomp(hcomp(chi, psi), theta))
            right = vcomp(hcomp(chi, hcomp(psi, theta)), assoc(*tops))
            if left is None or left != right:
                violations.append(Violation(law="associator naturality", cells=[theta, psi, chi]))
    return violations


def validate_weak(B: WeakDoubleCategory) -> ValidationReport:
    """Strict vertical laws, interchange, invertible globular coherence
    squares, pentagon, triangle and naturality of associators and unitors.

    Raises:
        MalformedTable: if a table references an unknown id or an incomposable pair.
    """
    check_weak_tables(B)
    violations = double_violations(B, strict_horizontal=False)
    if not violations:
        violations = _coherence_cell_violations(B)
    if not violations:
        violations = _coherence_violations(B)
    if violations:
        logging.info(f"Weak double category {B.name!r} has {len(violations)} law violations")
    return ValidationReport(subject=B.name, violations=violations)

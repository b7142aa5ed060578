"""
Horizontally pseudo double functors: vertical structure is preserved
strictly, horizontal composition up to vertically invertible globular
compositors ``Φ_{a,c}: Gc∘Ga ⇒ G(c∘a)``.
"""

import logging

from pydantic import Field

from dblhatch.dblcore.functor import DoubleFunctor
from dblhatch.utils.types import ValidationReport, Violation


class HorizontallyPseudoDoubleFunctor(DoubleFunctor):
    """Compositors are keyed like horizontal composites, ``(c, a)`` for ``c∘a``.
    Missing pairs are read as identity compositors."""

    compositors: dict[tuple[str, str], str] = Field(default_factory=dict)
    normal: bool = True

    def compositor(self, a: str, c: str) -> str:
        found = self.compositors.get((c, a))
        return found if found is not None else super().compositor(a, c)


def as_pseudo(F: DoubleFunctor) -> HorizontallyPseudoDoubleFunctor:
    if isinstance(F, HorizontallyPseudoDoubleFunctor):
        return F
    return HorizontallyPseudoDoubleFunctor(**dict(F))


def same_pseudo_functor(F: DoubleFunctor, G: DoubleFunctor) -> bool:
    """Equal cell maps and equal compositors; strict functors have identity compositors."""
    if F.mapping() != G.mapping():
        return False
    return all(F.compositor(a, c) == G.compositor(a, c) for c, a in F.source.hcomposable_pairs())


def compose_pseudo(G: DoubleFunctor, F: DoubleFunctor) -> HorizontallyPseudoDoubleFunctor:
    """``G∘F`` with compositor ``G(Φ^F_{a,c}) • Φ^G_{Fa,Fc}``."""
    C = G.target
    compositors = {}
    for c, a in F.source.hcomposable_pairs():
        compositors[(c, a)] = C.vcomp_sq(
            G.squares[F.compositor(a, c)], G.compositor(F.hmors[a], F.hmors[c])
        )
    return HorizontallyPseudoDoubleFunctor(
        name=f"{G.name}.{F.name}",
        source=F.source,
        target=C,
        objects={x: G.objects[y] for x, y in F.objects.items()},
        hmors={a: G.hmors[b] for a, b in F.hmors.items()},
        vmors={u: G.vmors[v] for u, v in F.vmors.items()},
        squares={s: G.squares[t] for s, t in F.squares.items()},
        compositors=compositors,
        normal=getattr(G, "normal", True) and getattr(F, "normal", True),
    )


def _boundary_violations(G: DoubleFunctor) -> list[Violation]:
    A, B = G.source, G.target
    violations = []
    for a, (x, y) in sorted(A.hmors.items()):
        if B.hmors.get(G.hmors.get(a, "")) != (G.objects[x], G.objects[y]):
            violations.append(Violation(law="horizontal morphism boundary", cells=[a]))
    for u, (x, y) in sorted(A.vmors.items()):
        if B.vmors.get(G.vmors.get(u, "")) != (G.objects[x], G.objects[y]):
            violations.append(Violation(law="vertical morphism boundary", cells=[u]))
    for alpha, (top, bottom, left, right) in sorted(A.squares.items()):
        expected = (G.hmors[top], G.hmors[bottom], G.vmors[left], G.vmors[right])
        if B.squares.get(G.squares.get(alpha, "")) != expected:
            violations.append(Violation(law="square boundary", cells=[alpha]))
    return violations


def verify_pseudo_functor(G: DoubleFunctor) -> ValidationReport:
    """Strict vertical structure, invertible compositors, unitality,
    associativity and naturality of compositors."""
    A, B = G.source, G.target
    violations = _boundary_violations(G)
    if violations:
        return ValidationReport(subject=G.name, violations=violations)

    for x in sorted(A.objects):
        if G.vmors[A.vid(x)] != B.vid(G.objects[x]):
            violations.append(Violation(law="preserves vertical identities", cells=[x]))
        if getattr(G, "normal", True) and G.hmors[A.hid(x)] != B.hid(G.objects[x]):
            violations.append(Violation(law="normal", cells=[x]))
    for v, u in A.vcomposable_pairs():
        if G.vmors[A.vcomp(v, u)] != B.vcomp(G.vmors[v], G.vmors[u]):
            violations.append(Violation(law="preserves vertical composition", cells=[v, u]))
    for u in sorted(A.vmors):
        if G.squares[A.id_square(u)] != B.id_square(G.vmors[u]):
            violations.append(Violation(law="preserves vertical identity squares", cells=[u]))
    for a in sorted(A.hmors):
        if G.squares[A.e_square(a)] != B.e_square(G.hmors[a]):
            violations.append(Violation(law="preserves horizontal identity squares", cells=[a]))
    for beta, alpha in A.square_vpairs():
        if G.squares[A.vcomp_sq(beta, alpha)] != B.vcomp_sq(G.squares[beta], G.squares[alpha]):
            violations.append(Violation(law="preserves vertical composition of squares", cells=[beta, alpha]))

    for c, a in A.hcomposable_pairs():
        phi = G.compositor(a, c)
        top, bottom = B.hcomp(G.hmors[c], G.hmors[a]), G.hmors[A.hcomp(c, a)]
        if top is None or phi not in B.globular_squares(top, bottom) or B.vertical_inverse(phi) is None:
            violations.append(Violation(law="compositor", cells=[c, a]))
    if violations:
        return ValidationReport(subject=G.name, violations=violations)

    for c, a in A.hcomposable_pairs():
        if A.is_hidentity(a) or A.is_hidentity(c):
            if G.compositor(a, c) != B.e_square(G.hmors[A.hcomp(c, a)]):
                violations.append(Violation(law="compositor unitality", cells=[c, a]))
    for c, a in A.hcomposable_pairs():
        for d in A.hmors_from(A.htgt(c)):
            dc, ca = A.hcomp(d, c), A.hcomp(c, a)
            lhs = B.vcomp_sq(G.compositor(a, dc), B.hcomp_sq(G.compositor(c, d), B.e_square(G.hmors[a])))
            rhs = B.vcomp_sq(G.compositor(ca, d), B.hcomp_sq(B.e_square(G.hmors[d]), G.compositor(a, c)))
            if lhs is None or lhs != rhs:
                violations.append(Violation(law="compositor associativity", cells=[d, c, a]))
    for beta, alpha in A.square_hpairs():
        a, a2 = A.top(alpha), A.bottom(alpha)
        c, c2 = A.top(beta), A.bottom(beta)
        lhs = B.vcomp_sq(G.compositor(a2, c2), B.hcomp_sq(G.squares[beta], G.squares[alpha]))
        rhs = B.vcomp_sq(G.squares[A.hcomp_sq(beta, alpha)], G.compositor(a, c))
        if lhs is None or lhs != rhs:
            violations.append(Violation(law="compositor naturality", cells=[beta, alpha]))
    if violations:
        logging.debug(f"Pseudo functor {G.name}: {len(violations)} violations")
    return ValidationReport(subject=G.name, violations=violations)

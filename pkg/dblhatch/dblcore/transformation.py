"""
Horizontal and vertical transformations between double functors, strict and
pseudo, and the modifications between them.

A horizontal transformation ``h: F ⇒ G`` between functors ``A -> B`` has

- a horizontal component ``h_X: FX -> GX`` per object,
- a square ``h_u`` per vertical morphism ``u: X => X'`` with boundary
  ``(h_X, h_X', Fu, Gu)``,
- a globular square ``h_a: Ga∘h_X ⇒ h_Y∘Fa`` per horizontal morphism
  ``a: X -> Y``; it is an identity square for strict transformations and
  vertically invertible for pseudo ones.

Vertical transformations are the transposes of horizontal ones and are
verified by transposing. ``F`` and ``G`` may carry compositors (horizontally
pseudo double functors); every formula below reads them through
``DoubleFunctor.compositor``.
"""

import logging
from collections.abc import Iterator
from typing import Literal

from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor, compose_double_functors
from dblhatch.dblcore.ops import transpose_functor
from dblhatch.utils.search import Budget, Constraint, solve
from dblhatch.utils.types import ValidationReport, Violation

Kind = Literal["strict", "pseudo"]


def same_functor(F: DoubleFunctor, G: DoubleFunctor) -> bool:
    return F.mapping() == G.mapping()


def parallel_functors(F: DoubleFunctor, G: DoubleFunctor) -> bool:
    if F.source is G.source and F.target is G.target:
        return True
    return F.source.model_dump(exclude={"name"}) == G.source.model_dump(exclude={"name"}) and (
        F.target.model_dump(exclude={"name"}) == G.target.model_dump(exclude={"name"})
    )


class HorizontalTransformation(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    kind: Kind = "strict"
    source: DoubleFunctor
    target: DoubleFunctor
    components: dict[str, str]
    vmor_squares: dict[str, str]
    hmor_squares: dict[str, str]

    def key(self) -> tuple:
        return (
            tuple(sorted(self.source.mapping()["ob"].items())),
            tuple(sorted(self.components.items())),
            tuple(sorted(self.vmor_squares.items())),
            tuple(sorted(self.hmor_squares.items())),
        )

    def as_vertical(self) -> "VerticalTransformation":
        """The same data read as a vertical transformation between the transposed functors."""
        return VerticalTransformation(
            kind=self.kind,
            source=transpose_functor(self.source),
            target=transpose_functor(self.target),
            components=dict(self.components),
            hmor_squares=dict(self.vmor_squares),
            vmor_squares=dict(self.hmor_squares),
        )


class VerticalTransformation(BaseModel):
    """``r: F ⇒ G`` with vertical components ``r_X: FX => GX``, squares
    ``r_a`` with boundary ``(Fa, Ga, r_X, r_Y)`` per horizontal morphism and,
    for pseudo transformations, horizontally invertible squares ``r_u`` per
    vertical morphism."""

    model_config = ConfigDict(frozen=True)

    kind: Kind = "strict"
    source: DoubleFunctor
    target: DoubleFunctor
    components: dict[str, str]
    hmor_squares: dict[str, str]
    vmor_squares: dict[str, str]

    def key(self) -> tuple:
        return (
            tuple(sorted(self.source.mapping()["ob"].items())),
            tuple(sorted(self.components.items())),
            tuple(sorted(self.hmor_squares.items())),
            tuple(sorted(self.vmor_squares.items())),
        )

    def as_horizontal(self) -> HorizontalTransformation:
        return HorizontalTransformation(
            kind=self.kind,
            source=transpose_functor(self.source),
            target=transpose_functor(self.target),
            components=dict(self.components),
            vmor_squares=dict(self.hmor_squares),
            hmor_squares=dict(self.vmor_squares),
        )


class Modification(BaseModel):
    """A square in a double category of functors: components ``μ_X`` with
    boundary ``(top_X, bottom_X, left_X, right_X)``."""

    model_config = ConfigDict(frozen=True)

    top: HorizontalTransformation
    bottom: HorizontalTransformation
    left: VerticalTransformation
    right: VerticalTransformation
    components: dict[str, str]

    def transposed(self) -> "Modification":
        return Modification(
            top=self.left.as_horizontal(),
            bottom=self.right.as_horizontal(),
            left=self.top.as_vertical(),
            right=self.bottom.as_vertical(),
            components=dict(self.components),
        )


# pasting formulas, shared by the verifier and the enumerators


def _compositor_inverse(G: DoubleFunctor, a: str, c: str) -> str | None:
    return G.target.vertical_inverse(G.compositor(a, c))


def expected_composite_square(
    F: DoubleFunctor,
    G: DoubleFunctor,
    components: dict[str, str],
    hmor_squares: dict[str, str],
    a: str,
    c: str,
) -> str | None:
    """``h_{c∘a}`` as forced by ``h_a`` and ``h_c`` and the compositors of ``F`` and ``G``."""
    A, B = F.source, F.target
    x, z = A.hsrc(a), A.htgt(c)
    h_x, h_z = components[x], components[z]
    step = B.hcomp_sq(_compositor_inverse(G, a, c), B.e_square(h_x))
    step = B.vcomp_sq(B.hcomp_sq(B.e_square(G.hmors[c]), hmor_squares[a]), step)
    step = B.vcomp_sq(B.hcomp_sq(hmor_squares[c], B.e_square(F.hmors[a])), step)
    return B.vcomp_sq(B.hcomp_sq(B.e_square(h_z), F.compositor(a, c)), step)


def square_naturality_holds(
    F: DoubleFunctor,
    G: DoubleFunctor,
    vmor_squares: dict[str, str],
    hmor_squares: dict[str, str],
    alpha: str,
) -> bool:
    """``h_{a'} • (Gα ∘ h_u) = (h_v ∘ Fα) • h_a`` for ``α: (a, a', u, v)``."""
    A, B = F.source, F.target
    top, bottom, left, right = A.squares[alpha]
    lhs = B.vcomp_sq(hmor_squares[bottom], B.hcomp_sq(G.squares[alpha], vmor_squares[left]))
    rhs = B.vcomp_sq(B.hcomp_sq(vmor_squares[right], F.squares[alpha]), hmor_squares[top])
    return lhs is not None and lhs == rhs


def _hmor_square_candidates(
    kind: Kind, B: DoubleCategory, top: str | None, bottom: str | None
) -> list[str]:
    if top is None or bottom is None:
        return []
    if kind == "strict":
        return [B.e_square(top)] if top == bottom else []
    return [s for s in B.globular_squares(top, bottom) if B.vertical_inverse(s) is not None]


# verification


def verify_horizontal(t: HorizontalTransformation) -> ValidationReport:
    """Every coherence equality of a horizontal transformation, checked by
    evaluating the pastings in the target's tables."""
    F, G = t.source, t.target
    A, B = F.source, F.target
    violations = []
    if not parallel_functors(F, G):
        return ValidationReport(violations=[Violation(law="parallel functors", cells=[F.name, G.name])])

    for x in sorted(A.objects):
        h_x = t.components.get(x)
        if h_x is None or B.hmors.get(h_x) != (F.objects[x], G.objects[x]):
            violations.append(Violation(law="component boundary", cells=[x]))
    for u in sorted(A.vmors):
        x, y = A.vmors[u]
        sq = t.vmor_squares.get(u)
        expected = (t.components.get(x), t.components.get(y), F.vmors[u], G.vmors[u])
        if sq is None or B.squares.get(sq) != expected:
            violations.append(Violation(law="vertical morphism square boundary", cells=[u]))
    for a in sorted(A.hmors):
        x, y = A.hmors[a]
        sq = t.hmor_squares.get(a)
        top = B.hcomp(G.hmors[a], t.components.get(x))
        bottom = B.hcomp(t.components.get(y), F.hmors[a])
        if sq is None or sq not in _hmor_square_candidates(t.kind, B, top, bottom):
            law = "strict naturality" if t.kind == "strict" else "pseudo naturality square"
            violations.append(Violation(law=law, cells=[a]))
    if violations:
        return ValidationReport(violations=violations)

    for x in sorted(A.objects):
        h_x = t.components[x]
        if t.vmor_squares[A.vid(x)] != B.e_square(h_x):
            violations.append(Violation(law="vertical identity", cells=[x]))
        if t.hmor_squares[A.hid(x)] != B.e_square(h_x):
            violations.append(Violation(law="horizontal identity", cells=[x]))
    for v, u in A.vcomposable_pairs():
        if t.vmor_squares[A.vcomp(v, u)] != B.vcomp_sq(t.vmor_squares[v], t.vmor_squares[u]):
            violations.append(Violation(law="vertical composition", cells=[v, u]))
    for c, a in A.hcomposable_pairs():
        expected = expected_composite_square(F, G, t.components, t.hmor_squares, a, c)
        if expected is None or t.hmor_squares[A.hcomp(c, a)] != expected:
            violations.append(Violation(law="horizontal composition", cells=[c, a]))
    for alpha in sorted(A.squares):
        if not square_naturality_holds(F, G, t.vmor_squares, t.hmor_squares, alpha):
            violations.append(Violation(law="square naturality", cells=[alpha]))
    if violations:
        logging.debug(f"Horizontal transformation {F.name} => {G.name}: {len(violations)} violations")
    return ValidationReport(subject=f"{F.name}=>{G.name}", violations=violations)


def verify_vertical(t: VerticalTransformation) -> ValidationReport:
    report = verify_horizontal(t.as_horizontal())
    return report.model_copy(update={"subject": f"{t.source.name}=>{t.target.name}"})


def verify_transformation(t: HorizontalTransformation | VerticalTransformation) -> ValidationReport:
    if isinstance(t, VerticalTransformation):
        return verify_vertical(t)
    return verify_horizontal(t)


def _hmor_law(frame: tuple, components: dict[str, str], a: str) -> bool:
    # k_a • (s_a ∘ μ_X) = (μ_Y ∘ r_a) • h_a
    h, k, r, s = frame
    B = h.source.target
    x, y = h.source.source.hmors[a]
    lhs = B.vcomp_sq(k.hmor_squares[a], B.hcomp_sq(s.hmor_squares[a], components[x]))
    rhs = B.vcomp_sq(B.hcomp_sq(components[y], r.hmor_squares[a]), h.hmor_squares[a])
    return lhs is not None and lhs == rhs


def _modification_hmor_law(mu: Modification, a: str) -> bool:
    return _hmor_law((mu.top, mu.bottom, mu.left, mu.right), mu.components, a)


def verify_modification(mu: Modification) -> ValidationReport:
    h, k, r, s = mu.top, mu.bottom, mu.left, mu.right
    A, B = h.source.source, h.source.target
    violations = []
    corners = (
        ("top source", h.source, r.source),
        ("top target", h.target, s.source),
        ("bottom source", k.source, r.target),
        ("bottom target", k.target, s.target),
    )
    for law, first, second in corners:
        if not same_functor(first, second):
            violations.append(Violation(law=f"modification frame {law}", cells=[first.name, second.name]))
    if violations:
        return ValidationReport(violations=violations)
    for x in sorted(A.objects):
        sq = mu.components.get(x)
        expected = (h.components[x], k.components[x], r.components[x], s.components[x])
        if sq is None or B.squares.get(sq) != expected:
            violations.append(Violation(law="modification component boundary", cells=[x]))
    if violations:
        return ValidationReport(violations=violations)
    for a in sorted(A.hmors):
        if not _modification_hmor_law(mu, a):
            violations.append(Violation(law="modification horizontal naturality", cells=[a]))
    transposed = mu.transposed()
    for u in sorted(A.vmors):
        if not _modification_hmor_law(transposed, u):
            violations.append(Violation(law="modification vertical naturality", cells=[u]))
    return ValidationReport(violations=violations)


# identities and composition


def identity_horizontal(F: DoubleFunctor, kind: Kind = "strict") -> HorizontalTransformation:
    A, B = F.source, F.target
    return HorizontalTransformation(
        kind=kind,
        source=F,
        target=F,
        components={x: B.hid(F.objects[x]) for x in A.objects},
        vmor_squares={u: B.id_square(F.vmors[u]) for u in A.vmors},
        hmor_squares={a: B.e_square(F.hmors[a]) for a in A.hmors},
    )


def identity_vertical(F: DoubleFunctor, kind: Kind = "strict") -> VerticalTransformation:
    A, B = F.source, F.target
    return VerticalTransformation(
        kind=kind,
        source=F,
        target=F,
        components={x: B.vid(F.objects[x]) for x in A.objects},
        hmor_squares={a: B.e_square(F.hmors[a]) for a in A.hmors},
        vmor_squares={u: B.id_square(F.vmors[u]) for u in A.vmors},
    )


def compose_horizontal(
    k: HorizontalTransformation, h: HorizontalTransformation
) -> HorizontalTransformation:
    """``k∘h`` for ``h: F ⇒ G`` and ``k: G ⇒ H``."""
    A, B = h.source.source, h.source.target
    hmor_squares = {}
    for a in A.hmors:
        x, y = A.hmors[a]
        hmor_squares[a] = B.vcomp_sq(
            B.hcomp_sq(B.e_square(k.components[y]), h.hmor_squares[a]),
            B.hcomp_sq(k.hmor_squares[a], B.e_square(h.components[x])),
        )
    return HorizontalTransformation(
        kind="pseudo" if "pseudo" in (h.kind, k.kind) else "strict",
        source=h.source,
        target=k.target,
        components={x: B.hcomp(k.components[x], h.components[x]) for x in A.objects},
        vmor_squares={u: B.hcomp_sq(k.vmor_squares[u], h.vmor_squares[u]) for u in A.vmors},
        hmor_squares=hmor_squares,
    )


def compose_vertical(s: VerticalTransformation, r: VerticalTransformation) -> VerticalTransformation:
    """``s•r`` for ``r: F ⇒ G`` and ``s: G ⇒ H``."""
    return compose_horizontal(s.as_horizontal(), r.as_horizontal()).as_vertical()


def identity_modification_horizontal(h: HorizontalTransformation) -> Modification:
    B = h.source.target
    return Modification(
        top=h,
        bottom=h,
        left=identity_vertical(h.source),
        right=identity_vertical(h.target),
        components={x: B.e_square(c) for x, c in h.components.items()},
    )


def identity_modification_vertical(r: VerticalTransformation) -> Modification:
    B = r.source.target
    return Modification(
        top=identity_horizontal(r.source),
        bottom=identity_horizontal(r.target),
        left=r,
        right=r,
        components={x: B.id_square(c) for x, c in r.components.items()},
    )


def hcompose_modifications(nu: Modification, mu: Modification) -> Modification:
    """``ν∘μ`` with ``μ`` on the left (``μ.right == ν.left``)."""
    B = mu.top.source.target
    return Modification(
        top=compose_horizontal(nu.top, mu.top),
        bottom=compose_horizontal(nu.bottom, mu.bottom),
        left=mu.left,
        right=nu.right,
        components={x: B.hcomp_sq(nu.components[x], mu.components[x]) for x in mu.components},
    )


def vcompose_modifications(nu: Modification, mu: Modification) -> Modification:
    """``ν•μ`` with ``μ`` on top (``μ.bottom == ν.top``)."""
    B = mu.top.source.target
    return Modification(
        top=mu.top,
        bottom=nu.bottom,
        left=compose_vertical(nu.left, mu.left),
        right=compose_vertical(nu.right, mu.right),
        components={x: B.vcomp_sq(nu.components[x], mu.components[x]) for x in mu.components},
    )


# whiskering with strict double functors


def whisker_functor_left(H: DoubleFunctor, t: HorizontalTransformation) -> HorizontalTransformation:
    """``H t: HF ⇒ HG`` for a strict functor ``H`` out of the target of ``t``."""
    return HorizontalTransformation(
        kind=t.kind,
        source=compose_double_functors(H, t.source),
        target=compose_double_functors(H, t.target),
        components={x: H.hmors[c] for x, c in t.components.items()},
        vmor_squares={u: H.squares[s] for u, s in t.vmor_squares.items()},
        hmor_squares={a: H.squares[s] for a, s in t.hmor_squares.items()},
    )


def whisker_functor_right(t: HorizontalTransformation, K: DoubleFunctor) -> HorizontalTransformation:
    """``t K: FK ⇒ GK`` for a strict functor ``K`` into the source of ``t``."""
    return HorizontalTransformation(
        kind=t.kind,
        source=compose_double_functors(t.source, K),
        target=compose_double_functors(t.target, K),
        components={x: t.components[y] for x, y in K.objects.items()},
        vmor_squares={u: t.vmor_squares[v] for u, v in K.vmors.items()},
        hmor_squares={a: t.hmor_squares[b] for a, b in K.hmors.items()},
    )


# enumeration


def enumerate_horizontal(
    F: DoubleFunctor, G: DoubleFunctor, kind: Kind = "strict", budget: Budget | None = None
) -> Iterator[HorizontalTransformation]:
    """Every horizontal transformation ``F ⇒ G`` of the given kind, in
    deterministic order.

    Raises:
        BudgetExceeded: if the search visits more nodes than allowed.
    """
    A, B = F.source, F.target
    variables = (
        [("ob", x) for x in sorted(A.objects)]
        + [("v", u) for u in sorted(A.vmors)]
        + [("h", a) for a in sorted(A.hmors)]
    )

    def domain(var, assignment):
        tag, cell = var
        if tag == "ob":
            return B.hom_h(F.objects[cell], G.objects[cell])
        if tag == "v":
            x, y = A.vmors[cell]
            return B.squares_with(
                assignment[("ob", x)], assignment[("ob", y)], F.vmors[cell], G.vmors[cell]
            )
        x, y = A.hmors[cell]
        top = B.hcomp(G.hmors[cell], assignment[("ob", x)])
        bottom = B.hcomp(assignment[("ob", y)], F.hmors[cell])
        return _hmor_square_candidates(kind, B, top, bottom)

    def components(a: dict) -> dict[str, str]:
        return {cell: value for (tag, cell), value in a.items() if tag == "ob"}

    def hmor_squares(a: dict) -> dict[str, str]:
        return {cell: value for (tag, cell), value in a.items() if tag == "h"}

    def vmor_squares(a: dict) -> dict[str, str]:
        return {cell: value for (tag, cell), value in a.items() if tag == "v"}

    constraints = []
    for x in sorted(A.objects):
        e_x, id_x = A.vid(x), A.hid(x)
        constraints.append(
            Constraint(
                scope=(("ob", x), ("v", e_x)),
                check=lambda a, x=x, e_x=e_x: a[("v", e_x)] == B.e_square(a[("ob", x)]),
                label="vertical identity",
            )
        )
        constraints.append(
            Constraint(
                scope=(("ob", x), ("h", id_x)),
                check=lambda a, x=x, id_x=id_x: a[("h", id_x)] == B.e_square(a[("ob", x)]),
                label="horizontal identity",
            )
        )
    for v, u in A.vcomposable_pairs():
        w = A.vcomp(v, u)
        constraints.append(
            Constraint(
                scope=(("v", v), ("v", u), ("v", w)),
                check=lambda a, v=v, u=u, w=w: a[("v", w)] == B.vcomp_sq(a[("v", v)], a[("v", u)]),
                label="vertical composition",
            )
        )
    for c, a_ in A.hcomposable_pairs():
        ca = A.hcomp(c, a_)
        x, z = A.hsrc(a_), A.htgt(c)
        constraints.append(
            Constraint(
                scope=(("h", a_), ("h", c), ("h", ca), ("ob", x), ("ob", z)),
                check=lambda a, c=c, a_=a_, ca=ca: a[("h", ca)]
                == expected_composite_square(F, G, components(a), hmor_squares(a), a_, c),
                label="horizontal composition",
            )
        )
    for alpha in sorted(A.squares):
        top, bottom, left, right = A.squares[alpha]
        constraints.append(
            Constraint(
                scope=tuple(dict.fromkeys((("h", top), ("h", bottom), ("v", left), ("v", right)))),
                check=lambda a, alpha=alpha: square_naturality_holds(
                    F, G, vmor_squares(a), hmor_squares(a), alpha
                ),
                label="square naturality",
            )
        )

    for solution in solve(variables, domain, constraints, budget):
        yield HorizontalTransformation(
            kind=kind,
            source=F,
            target=G,
            components=components(solution),
            vmor_squares=vmor_squares(solution),
            hmor_squares=hmor_squares(solution),
        )


def enumerate_vertical(
    F: DoubleFunctor, G: DoubleFunctor, kind: Kind = "strict", budget: Budget | None = None
) -> Iterator[VerticalTransformation]:
    for t in enumerate_horizontal(transpose_functor(F), transpose_functor(G), kind, budget):
        yield VerticalTransformation(
            kind=kind,
            source=F,
            target=G,
            components=t.components,
            hmor_squares=t.vmor_squares,
            vmor_squares=t.hmor_squares,
        )


def enumerate_modifications(
    top: HorizontalTransformation,
    bottom: HorizontalTransformation,
    left: VerticalTransformation,
    right: VerticalTransformation,
    budget: Budget | None = None,
) -> Iterator[Modification]:
    A, B = top.source.source, top.source.target
    objects = sorted(A.objects)

    def domain(x, assignment):
        return B.squares_with(
            top.components[x], bottom.components[x], left.components[x], right.components[x]
        )

    frame = (top, bottom, left, right)
    flipped = (left.as_horizontal(), right.as_horizontal(), top.as_vertical(), bottom.as_vertical())

    constraints = []
    for a in sorted(A.hmors):
        x, y = A.hmors[a]
        constraints.append(
            Constraint(
                scope=tuple(dict.fromkeys((x, y))),
                check=lambda asg, a=a: _hmor_law(frame, asg, a),
                label="modification horizontal naturality",
            )
        )
    for u in sorted(A.vmors):
        x, y = A.vmors[u]
        constraints.append(
            Constraint(
                scope=tuple(dict.fromkeys((x, y))),
                check=lambda asg, u=u: _hmor_law(flipped, asg, u),
                label="modification vertical naturality",
            )
        )
    for solution in solve(objects, domain, constraints, budget):
        yield Modification(top=top, bottom=bottom, left=left, right=right, components=solution)

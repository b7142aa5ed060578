"""
Pseudo inverses of double biequivalences.

For a double biequivalence ``F: A -> B`` whose target has a vertical
category made of copies of 𝟙 and 𝟚, ``whitehead_inverse`` builds a normal
horizontally pseudo double functor ``G: B -> A`` with horizontal pseudo
natural equivalences ``η: id ≃ GF`` and ``ε: FG ≃ id``.

The construction runs in stages: vertical components first (objects and
vertical morphisms with their equivalences), then horizontal morphisms and
compositors, then squares, then ``η``. Every choice is the first witness in
deterministic order, and an exact preimage is preferred whenever there is
one. Every output is re-verified before it is returned.
"""

import logging

from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.functor import DoubleFunctor, enumerate_double_functors, identity_double_functor
from dblhatch.dblcore.transformation import HorizontalTransformation
from dblhatch.equiv.equivalence import (
    AdjointEquivalenceWitness,
    find_adjoint_equivalence,
    is_horizontal_equivalence,
    reverse_equivalence,
)
from dblhatch.equiv.weak_inverse import (
    WeakInverseWitness,
    is_weakly_horizontally_invertible,
    unique_weak_inverse,
)
from dblhatch.errors import InternalInconsistency, PreconditionFailed
from dblhatch.fincat.free import is_disjoint_union_1_2
from dblhatch.homotopy.equivalence import (
    PseudoEquivalence,
    build_pseudo_equivalence,
    find_pseudo_equivalence,
    verify_pseudo_equivalence,
)
from dblhatch.homotopy.pseudo_functor import (
    HorizontallyPseudoDoubleFunctor,
    as_pseudo,
    compose_pseudo,
    same_pseudo_functor,
    verify_pseudo_functor,
)
from dblhatch.model.conditions import check_double_biequivalence
from dblhatch.utils.search import Budget, ensure_budget

VERTICAL_SHAPE = "vertical category is a union of 1 and 2"


class WhiteheadData(BaseModel):
    """``(G, η, ε)`` for a double functor ``F: A -> B``."""

    model_config = ConfigDict(frozen=True)

    inverse: HorizontallyPseudoDoubleFunctor
    unit: PseudoEquivalence
    counit: PseudoEquivalence


class _Construction:
    def __init__(self, F: DoubleFunctor):
        self.F = F
        self.A, self.B = F.source, F.target
        self.objects: dict[str, str] = {}
        self.hmors: dict[str, str] = {}
        self.vmors: dict[str, str] = {}
        self.squares: dict[str, str] = {}
        self.compositors: dict[tuple[str, str], str] = {}
        # adjoint data on ε_C: FGC -> C and on ε′_C: C -> FGC
        self.counit_data: dict[str, AdjointEquivalenceWitness] = {}
        self.back_data: dict[str, AdjointEquivalenceWitness] = {}
        self.counit_vmors: dict[str, str] = {}
        self.back_vmors: dict[str, str] = {}
        self.counit_hmors: dict[str, str] = {}
        # ε̄_b: ε′_C∘b∘ε_B ⇒ FGb
        self.comparisons: dict[str, str] = {}

    # choices

    def _equivalence_into_image(self, y: str) -> tuple[str, str]:
        F, A, B = self.F, self.A, self.B
        for x in sorted(A.objects):
            if F.objects[x] == y:
                return x, B.hid(y)
        for x in sorted(A.objects):
            for b in B.hom_h(y, F.objects[x]):
                if is_horizontal_equivalence(B, b):
                    return x, b
        raise PreconditionFailed("db1", y)

    def _vertical_preimage(self, v: str) -> tuple[str, str]:
        F, A, B = self.F, self.A, self.B
        for u in sorted(A.vmors):
            if F.vmors[u] == v:
                return u, B.id_square(v)
        for beta in B.squares_with_left(v):
            preimages = [u for u in sorted(A.vmors) if F.vmors[u] == B.right(beta)]
            if preimages and is_weakly_horizontally_invertible(B, beta):
                return preimages[0], beta
        raise PreconditionFailed("db3", v)

    def _horizontal_preimage(self, x: str, z: str, k: str) -> tuple[str, str]:
        F, A, B = self.F, self.A, self.B
        for a in A.hom_h(x, z):
            if F.hmors[a] == k:
                return a, B.e_square(k)
        for a in A.hom_h(x, z):
            for sq in B.globular_squares(k, F.hmors[a]):
                if B.vertical_inverse(sq) is not None:
                    return a, sq
        raise PreconditionFailed("db2", k)

    def _square_preimage(self, frame: tuple, image: str | None, what: str) -> str:
        if image is None or None in frame:
            raise InternalInconsistency(f"pasting for {what} is undefined")
        found = [alpha for alpha in self.A.squares_with(*frame) if self.F.squares[alpha] == image]
        if len(found) != 1:
            raise InternalInconsistency(f"{len(found)} preimages of the pasting for {what}")
        return found[0]

    # stages

    def _set_object(self, c: str, x: str, back: str) -> None:
        w = find_adjoint_equivalence(self.B, back)
        if w is None:
            raise InternalInconsistency(f"{back} stopped being an equivalence")
        self.objects[c] = x
        self.back_data[c] = w
        self.counit_data[c] = reverse_equivalence(self.B, w)

    def vertical_components(self) -> None:
        A, B = self.A, self.B
        for v in sorted(B.vmors):
            if B.is_videntity(v):
                continue
            u, beta = self._vertical_preimage(v)
            source, target = B.vmors[v]
            self._set_object(source, A.vsrc(u), B.top(beta))
            self._set_object(target, A.vtgt(u), B.bottom(beta))
            self.vmors[v] = u
            self.back_vmors[v] = beta
            self.counit_vmors[v] = unique_weak_inverse(
                B, beta, self.back_data[source], self.back_data[target]
            )
        for y in sorted(B.objects):
            if y not in self.objects:
                self._set_object(y, *self._equivalence_into_image(y))
        for y in sorted(B.objects):
            e_y = B.vid(y)
            self.vmors[e_y] = A.vid(self.objects[y])
            self.counit_vmors[e_y] = B.e_square(self.counit_data[y].forward)
            self.back_vmors[e_y] = B.e_square(self.counit_data[y].backward)
        logging.debug(f"Pseudo inverse of {self.F.name}: objects {self.objects}")

    def horizontal_morphisms(self) -> None:
        A, B = self.A, self.B
        for b in sorted(B.hmors):
            x, y = B.hmors[b]
            if B.is_hidentity(b):
                self.hmors[b] = A.hid(self.objects[x])
                self.comparisons[b] = B.vertical_inverse(self.counit_data[x].unit)
            else:
                k = B.hcomp(self.counit_data[y].backward, B.hcomp(b, self.counit_data[x].forward))
                self.hmors[b], self.comparisons[b] = self._horizontal_preimage(
                    self.objects[x], self.objects[y], k
                )
            eps_x, eps_y = self.counit_data[x].forward, self.counit_data[y].forward
            lower = B.hcomp_sq(
                B.vertical_inverse(self.counit_data[y].counit), B.e_square(B.hcomp(b, eps_x))
            )
            self.counit_hmors[b] = B.vcomp_sq(
                B.hcomp_sq(B.e_square(eps_y), self.comparisons[b]), lower
            )

    def compositor_squares(self) -> None:
        A, B = self.A, self.B
        inverse = B.vertical_inverse
        for c, b in B.hcomposable_pairs():
            if B.is_hidentity(b) or B.is_hidentity(c):
                continue
            x, y = B.hmors[b]
            z = B.htgt(c)
            cb = B.hcomp(c, b)
            whiskered = B.hcomp_sq(
                B.e_square(B.hcomp(self.counit_data[z].backward, c)),
                B.hcomp_sq(self.counit_data[y].counit, B.e_square(B.hcomp(b, self.counit_data[x].forward))),
            )
            image = B.vcomp_sq(
                self.comparisons[cb],
                B.vcomp_sq(
                    whiskered,
                    B.hcomp_sq(inverse(self.comparisons[c]), inverse(self.comparisons[b])),
                ),
            )
            frame = (
                A.hcomp(self.hmors[c], self.hmors[b]),
                self.hmors[cb],
                A.vid(self.objects[x]),
                A.vid(self.objects[z]),
            )
            self.compositors[(c, b)] = self._square_preimage(frame, image, f"compositor {c},{b}")

    def square_images(self) -> None:
        B = self.B
        for beta in sorted(B.squares):
            top, bottom, left, right = B.squares[beta]
            middle = B.hcomp_sq(self.back_vmors[right], B.hcomp_sq(beta, self.counit_vmors[left]))
            image = B.vcomp_sq(
                self.comparisons[bottom],
                B.vcomp_sq(middle, B.vertical_inverse(self.comparisons[top])),
            )
            frame = (self.hmors[top], self.hmors[bottom], self.vmors[left], self.vmors[right])
            self.squares[beta] = self._square_preimage(frame, image, f"square {beta}")

    def inverse(self) -> HorizontallyPseudoDoubleFunctor:
        return HorizontallyPseudoDoubleFunctor(
            name=f"G_{self.F.name}",
            source=self.B,
            target=self.A,
            objects=self.objects,
            hmors=self.hmors,
            vmors=self.vmors,
            squares=self.squares,
            compositors=self.compositors,
            normal=True,
        )

    def counit(self, G: HorizontallyPseudoDoubleFunctor) -> PseudoEquivalence:
        B = self.B
        t = HorizontalTransformation(
            kind="pseudo",
            source=compose_pseudo(self.F, G),
            target=identity_double_functor(B),
            components={y: w.forward for y, w in self.counit_data.items()},
            vmor_squares=self.counit_vmors,
            hmor_squares=self.counit_hmors,
        )
        vmors = {
            v: WeakInverseWitness(
                square=self.counit_vmors[v],
                inverse=self.back_vmors[v],
                top=self.counit_data[x],
                bottom=self.counit_data[y],
            )
            for v, (x, y) in B.vmors.items()
        }
        return PseudoEquivalence(transformation=t, objects=dict(self.counit_data), vmors=vmors)

    def unit(self, G: HorizontallyPseudoDoubleFunctor) -> PseudoEquivalence:
        F, A, B = self.F, self.A, self.B
        inverse = B.vertical_inverse
        GF = compose_pseudo(G, F)
        components, comparisons = {}, {}
        for x in sorted(A.objects):
            fx = F.objects[x]
            components[x], comparisons[x] = self._horizontal_preimage(
                x, self.objects[fx], self.counit_data[fx].backward
            )
        vmor_squares = {}
        for u in sorted(A.vmors):
            x, y = A.vmors[u]
            image = B.vcomp_sq(
                comparisons[y], B.vcomp_sq(self.back_vmors[F.vmors[u]], inverse(comparisons[x]))
            )
            frame = (components[x], components[y], u, GF.vmors[u])
            vmor_squares[u] = self._square_preimage(frame, image, f"unit square of {u}")
        hmor_squares = {}
        for a in sorted(A.hmors):
            x, y = A.hmors[a]
            fa, fx, fy = F.hmors[a], F.objects[x], F.objects[y]
            image = B.vcomp_sq(
                B.hcomp_sq(comparisons[y], B.e_square(fa)),
                B.vcomp_sq(
                    B.hcomp_sq(
                        B.e_square(B.hcomp(self.counit_data[fy].backward, fa)),
                        self.counit_data[fx].counit,
                    ),
                    B.hcomp_sq(inverse(self.comparisons[fa]), inverse(comparisons[x])),
                ),
            )
            frame = (
                A.hcomp(GF.hmors[a], components[x]),
                A.hcomp(components[y], a),
                A.vid(x),
                A.vid(self.objects[fy]),
            )
            hmor_squares[a] = self._square_preimage(frame, image, f"unit square of {a}")
        t = HorizontalTransformation(
            kind="pseudo",
            source=identity_double_functor(A),
            target=GF,
            components=components,
            vmor_squares=vmor_squares,
            hmor_squares=hmor_squares,
        )
        found = build_pseudo_equivalence(t)
        if found is None:
            raise InternalInconsistency(f"unit of the pseudo inverse of {F.name} is not an equivalence")
        return found


def _check_preconditions(F: DoubleFunctor) -> None:
    report = check_double_biequivalence(F)
    if not report.passed:
        tag = report.failed()[0]
        logging.warning(f"{F.name} is not a double biequivalence: {tag}")
        raise PreconditionFailed(tag, report.counterexamples[tag].missing)
    if not is_disjoint_union_1_2(F.target.vertical_category()):
        raise PreconditionFailed(VERTICAL_SHAPE, F.target.name)


def whitehead_inverse(F: DoubleFunctor) -> WhiteheadData:
    """A normal horizontally pseudo inverse of ``F`` up to horizontal pseudo
    natural equivalences.

    Raises:
        PreconditionFailed: if ``F`` fails a db condition or the target's
            vertical category is not a union of 𝟙 and 𝟚.
        InternalInconsistency: if a constructed datum fails verification.
    """
    _check_preconditions(F)
    construction = _Construction(F)
    construction.vertical_components()
    construction.horizontal_morphisms()
    construction.compositor_squares()
    construction.square_images()

    G = construction.inverse()
    report = verify_pseudo_functor(G)
    if not report.valid:
        raise InternalInconsistency(f"pseudo inverse of {F.name} fails {report.first()}")
    counit = construction.counit(G)
    report = verify_pseudo_equivalence(counit)
    if not report.valid:
        raise InternalInconsistency(f"counit of the pseudo inverse of {F.name} fails {report.first()}")
    unit = construction.unit(G)
    report = verify_pseudo_equivalence(unit)
    if not report.valid:
        raise InternalInconsistency(f"unit of the pseudo inverse of {F.name} fails {report.first()}")
    logging.info(f"Built pseudo inverse of {F.name} with {len(G.compositors)} compositors")
    return WhiteheadData(inverse=G, unit=unit, counit=counit)


def verify_whitehead_data(
    F: DoubleFunctor, G: DoubleFunctor, unit: PseudoEquivalence, counit: PseudoEquivalence
) -> bool:
    """``G`` is a normal horizontally pseudo functor ``B -> A``, ``unit`` an
    equivalence ``id ≃ GF`` and ``counit`` an equivalence ``FG ≃ id``."""
    A, B = F.source, F.target
    if G.source.model_dump(exclude={"name"}) != B.model_dump(exclude={"name"}):
        return False
    if G.target.model_dump(exclude={"name"}) != A.model_dump(exclude={"name"}):
        return False
    if not getattr(G, "normal", True) or not verify_pseudo_functor(G).valid:
        return False
    frames = (
        (unit, identity_double_functor(A), compose_pseudo(G, F)),
        (counit, compose_pseudo(F, G), identity_double_functor(B)),
    )
    for equivalence, source, target in frames:
        t = equivalence.transformation
        if not (same_pseudo_functor(t.source, source) and same_pseudo_functor(t.target, target)):
            return False
        if not verify_pseudo_equivalence(equivalence).valid:
            return False
    return True


def find_strict_homotopy_inverse(F: DoubleFunctor, budget: Budget | None = None) -> WhiteheadData | None:
    """A strict double functor ``G`` with horizontal pseudo natural adjoint
    equivalences ``id ≃ GF`` and ``FG ≃ id``, by exhaustive search.

    Raises:
        BudgetExceeded: if the search visits more nodes than allowed.
    """
    budget = ensure_budget(budget)
    A, B = F.source, F.target
    for G in enumerate_double_functors(B, A, budget):
        unit = find_pseudo_equivalence(identity_double_functor(A), compose_pseudo(G, F), budget)
        if unit is None:
            continue
        counit = find_pseudo_equivalence(compose_pseudo(F, G), identity_double_functor(B), budget)
        if counit is not None:
            return WhiteheadData(inverse=as_pseudo(G), unit=unit, counit=counit)
    return None

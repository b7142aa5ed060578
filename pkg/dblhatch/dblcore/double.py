"""
Finite strict double categories given by explicit tables.

Conventions used throughout dblhatch:

- ``hcompositions[(b, a)]`` is ``b∘a`` (``a`` first), ``vcompositions[(v, u)]``
  is ``v•u`` (``u`` on top).
- A square's boundary is ``(top, bottom, left, right)``: top and bottom are
  horizontal morphisms, left and right vertical ones.
- ``square_hcompositions[(β, α)]`` puts ``α`` on the left, so
  ``right(α) == left(β)``; ``square_vcompositions[(β, α)]`` puts ``α`` on
  top, so ``bottom(α) == top(β)``.
- ``hidentity_squares[u]`` is the horizontal identity square ``id_u`` on a
  vertical morphism, ``videntity_squares[a]`` the vertical identity square
  ``e_a`` on a horizontal one.
"""

import logging
from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict, PrivateAttr

from dblhatch.errors import MalformedTable
from dblhatch.fincat.category import FinCategory
from dblhatch.utils.structure import Operation, Presentation
from dblhatch.utils.types import ValidationReport, Violation

Boundary = tuple[str, str, str, str]


class DoubleCategory(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    objects: list[str]
    hmors: dict[str, tuple[str, str]]
    vmors: dict[str, tuple[str, str]]
    squares: dict[str, Boundary]
    hidentities: dict[str, str]
    videntities: dict[str, str]
    hcompositions: dict[tuple[str, str], str]
    vcompositions: dict[tuple[str, str], str]
    hidentity_squares: dict[str, str]
    videntity_squares: dict[str, str]
    square_hcompositions: dict[tuple[str, str], str]
    square_vcompositions: dict[tuple[str, str], str]

    _cache: dict = PrivateAttr(default_factory=dict)

    # boundaries

    def hsrc(self, a: str) -> str:
        return self.hmors[a][0]

    def htgt(self, a: str) -> str:
        return self.hmors[a][1]

    def vsrc(self, u: str) -> str:
        return self.vmors[u][0]

    def vtgt(self, u: str) -> str:
        return self.vmors[u][1]

    def top(self, alpha: str) -> str:
        return self.squares[alpha][0]

    def bottom(self, alpha: str) -> str:
        return self.squares[alpha][1]

    def left(self, alpha: str) -> str:
        return self.squares[alpha][2]

    def right(self, alpha: str) -> str:
        return self.squares[alpha][3]

    # identities and compositions

    def hid(self, x: str) -> str:
        return self.hidentities[x]

    def vid(self, x: str) -> str:
        return self.videntities[x]

    def id_square(self, u: str) -> str:
        return self.hidentity_squares[u]

    def e_square(self, a: str) -> str:
        return self.videntity_squares[a]

    def box(self, x: str) -> str:
        """``□_X = e_{id_X} = id_{e_X}``."""
        return self.e_square(self.hid(x))

    def hcomp(self, b: str, a: str) -> str | None:
        return self.hcompositions.get((b, a))

    def vcomp(self, v: str, u: str) -> str | None:
        return self.vcompositions.get((v, u))

    def hcomp_sq(self, beta: str | None, alpha: str | None) -> str | None:
        if beta is None or alpha is None:
            return None
        return self.square_hcompositions.get((beta, alpha))

    def vcomp_sq(self, beta: str | None, alpha: str | None) -> str | None:
        if beta is None or alpha is None:
            return None
        return self.square_vcompositions.get((beta, alpha))

    def is_hidentity(self, a: str) -> bool:
        return a in self._value_set("hidentities")

    def is_videntity(self, u: str) -> bool:
        return u in self._value_set("videntities")

    def _value_set(self, field: str) -> set[str]:
        key = ("values", field)
        if key not in self._cache:
            self._cache[key] = set(getattr(self, field).values())
        return self._cache[key]

    # indexes

    def _index(self, name: str, table: dict, key) -> dict:
        if name not in self._cache:
            index: dict = {}
            for cell in sorted(table):
                index.setdefault(key(cell), []).append(cell)
            self._cache[name] = index
        return self._cache[name]

    def hom_h(self, x: str, y: str) -> list[str]:
        return self._index("hom_h", self.hmors, self.hmors.__getitem__).get((x, y), [])

    def hom_v(self, x: str, y: str) -> list[str]:
        return self._index("hom_v", self.vmors, self.vmors.__getitem__).get((x, y), [])

    def hmors_from(self, x: str) -> list[str]:
        return self._index("hmors_from", self.hmors, self.hsrc).get(x, [])

    def vmors_from(self, x: str) -> list[str]:
        return self._index("vmors_from", self.vmors, self.vsrc).get(x, [])

    def squares_with(self, top: str, bottom: str, left: str, right: str) -> list[str]:
        """Squares with exactly this boundary, sorted."""
        return self._index("boundary", self.squares, self.squares.__getitem__).get(
            (top, bottom, left, right), []
        )

    def squares_with_left(self, u: str) -> list[str]:
        return self._index("by_left", self.squares, self.left).get(u, [])

    def squares_with_top(self, a: str) -> list[str]:
        return self._index("by_top", self.squares, self.top).get(a, [])

    def globular_squares(self, top: str, bottom: str) -> list[str]:
        """Squares ``top ⇒ bottom`` whose vertical sides are identities."""
        x, y = self.hmors[top]
        return self.squares_with(top, bottom, self.vid(x), self.vid(y))

    def is_globular(self, alpha: str) -> bool:
        top, bottom, left, right = self.squares[alpha]
        return self.is_videntity(left) and self.is_videntity(right)

    def vertical_inverse(self, alpha: str | None) -> str | None:
        """The two-sided inverse of ``alpha`` for vertical composition, if any."""
        if alpha is None:
            return None
        inverses = self._cache.setdefault("vertical_inverse", {})
        if alpha not in inverses:
            top, bottom = self.top(alpha), self.bottom(alpha)
            inverses[alpha] = next(
                (
                    beta
                    for beta in self.squares_with_top(bottom)
                    if self.bottom(beta) == top
                    and self.vcomp_sq(beta, alpha) == self.e_square(top)
                    and self.vcomp_sq(alpha, beta) == self.e_square(bottom)
                ),
                None,
            )
        return inverses[alpha]

    def hcomposable_pairs(self) -> Iterator[tuple[str, str]]:
        for a in sorted(self.hmors):
            for b in self.hmors_from(self.htgt(a)):
                yield b, a

    def vcomposable_pairs(self) -> Iterator[tuple[str, str]]:
        for u in sorted(self.vmors):
            for v in self.vmors_from(self.vtgt(u)):
                yield v, u

    def square_hpairs(self) -> Iterator[tuple[str, str]]:
        for alpha in sorted(self.squares):
            for beta in self.squares_with_left(self.right(alpha)):
                yield beta, alpha

    def square_vpairs(self) -> Iterator[tuple[str, str]]:
        for alpha in sorted(self.squares):
            for beta in self.squares_with_top(self.bottom(alpha)):
                yield beta, alpha

    # underlying 1-categories

    def horizontal_category(self) -> FinCategory:
        """U𝐇A: objects and horizontal morphisms."""
        return FinCategory(
            name=f"UH({self.name})",
            objects=list(self.objects),
            morphisms=dict(self.hmors),
            identities=dict(self.hidentities),
            composition=dict(self.hcompositions),
        )

    def vertical_category(self) -> FinCategory:
        """U𝐕A: objects and vertical morphisms."""
        return FinCategory(
            name=f"UV({self.name})",
            objects=list(self.objects),
            morphisms=dict(self.vmors),
            identities=dict(self.videntities),
            composition=dict(self.vcompositions),
        )

    # presentation for structure-map searches

    def double_operations(self) -> list[Operation]:
        def boundary(name: str, args: str, result: str, table: dict, index: int) -> Operation:
            return Operation(
                name=name,
                args=(args,),
                result=result,
                table={(c,): ends[index] for c, ends in table.items()},
                boundary=True,
            )

        def unary(name: str, args: str, result: str, table: dict) -> Operation:
            return Operation(name=name, args=(args,), result=result, table={(k,): v for k, v in table.items()})

        return [
            boundary("hsrc", "h", "ob", self.hmors, 0),
            boundary("htgt", "h", "ob", self.hmors, 1),
            boundary("vsrc", "v", "ob", self.vmors, 0),
            boundary("vtgt", "v", "ob", self.vmors, 1),
            boundary("top", "sq", "h", self.squares, 0),
            boundary("bottom", "sq", "h", self.squares, 1),
            boundary("left", "sq", "v", self.squares, 2),
            boundary("right", "sq", "v", self.squares, 3),
            unary("hid", "ob", "h", self.hidentities),
            unary("vid", "ob", "v", self.videntities),
            Operation(name="hcomp", args=("h", "h"), result="h", table=dict(self.hcompositions)),
            Operation(name="vcomp", args=("v", "v"), result="v", table=dict(self.vcompositions)),
            unary("sqh_id", "v", "sq", self.hidentity_squares),
            unary("sqv_id", "h", "sq", self.videntity_squares),
            Operation(
                name="hcomp_sq", args=("sq", "sq"), result="sq", table=dict(self.square_hcompositions)
            ),
            Operation(
                name="vcomp_sq", args=("sq", "sq"), result="sq", table=dict(self.square_vcompositions)
            ),
        ]

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
                operations=self.double_operations(),
            )
        return self._cache["presentation"]

    def size(self) -> int:
        return len(self.objects) + len(self.hmors) + len(self.vmors) + len(self.squares)


def check_double_tables(A: DoubleCategory) -> None:
    """Raise MalformedTable for unknown ids and incomposable declared pairs."""
    objects = set(A.objects)
    for kind, table in (("horizontal", A.hmors), ("vertical", A.vmors)):
        for f, (x, y) in sorted(table.items()):
            if x not in objects or y not in objects:
                raise MalformedTable(f"{kind} morphism {f} has an unknown end", [f])
    for alpha, (top, bottom, left, right) in sorted(A.squares.items()):
        if top not in A.hmors or bottom not in A.hmors or left not in A.vmors or right not in A.vmors:
            raise MalformedTable(f"square {alpha} has an unknown boundary", [alpha])

    identity_tables = (
        ("hidentities", A.hidentities, objects, A.hmors),
        ("videntities", A.videntities, objects, A.vmors),
        ("hidentity_squares", A.hidentity_squares, A.vmors, A.squares),
        ("videntity_squares", A.videntity_squares, A.hmors, A.squares),
    )
    for label, table, keys, values in identity_tables:
        for key, value in sorted(table.items()):
            if key not in keys or value not in values:
                raise MalformedTable(f"{label} entry for {key} references unknown ids", [key, value])

    for (b, a), c in sorted(A.hcompositions.items()):
        if any(m not in A.hmors for m in (a, b, c)):
            raise MalformedTable(f"horizontal composite {b}*{a} references unknown ids", [b, a, c])
        if A.htgt(a) != A.hsrc(b):
            raise MalformedTable(f"{b} is not composable with {a}", [b, a])
    for (v, u), w in sorted(A.vcompositions.items()):
        if any(m not in A.vmors for m in (u, v, w)):
            raise MalformedTable(f"vertical composite {v}.{u} references unknown ids", [v, u, w])
        if A.vtgt(u) != A.vsrc(v):
            raise MalformedTable(f"{v} is not composable with {u}", [v, u])
    for (beta, alpha), gamma in sorted(A.square_hcompositions.items()):
        if any(s not in A.squares for s in (alpha, beta, gamma)):
            raise MalformedTable(f"square composite {beta}*{alpha} references unknown ids", [beta, alpha])
        if A.right(alpha) != A.left(beta):
            raise MalformedTable(f"{beta} is not horizontally composable with {alpha}", [beta, alpha])
    for (beta, alpha), gamma in sorted(A.square_vcompositions.items()):
        if any(s not in A.squares for s in (alpha, beta, gamma)):
            raise MalformedTable(f"square composite {beta}.{alpha} references unknown ids", [beta, alpha])
        if A.bottom(alpha) != A.top(beta):
            raise MalformedTable(f"{beta} is not vertically composable with {alpha}", [beta, alpha])


def _boundary_violations(A: DoubleCategory) -> list[Violation]:
    violations = []
    for alpha, (top, bottom, left, right) in sorted(A.squares.items()):
        if (
            A.hsrc(top) != A.vsrc(left)
            or A.htgt(top) != A.vsrc(right)
            or A.hsrc(bottom) != A.vtgt(left)
            or A.htgt(bottom) != A.vtgt(right)
        ):
            violations.append(Violation(law="square boundary", cells=[alpha]))
    for x in sorted(A.objects):
        a, u = A.hidentities.get(x), A.videntities.get(x)
        if a is None or A.hmors[a] != (x, x):
            violations.append(Violation(law="horizontal identity", cells=[x]))
        if u is None or A.vmors[u] != (x, x):
            violations.append(Violation(law="vertical identity", cells=[x]))
    if violations:
        return violations
    for u in sorted(A.vmors):
        x, y = A.vmors[u]
        sq = A.hidentity_squares.get(u)
        if sq is None or A.squares[sq] != (A.hid(x), A.hid(y), u, u):
            violations.append(Violation(law="identity square id_u", cells=[u]))
    for a in sorted(A.hmors):
        x, y = A.hmors[a]
        sq = A.videntity_squares.get(a)
        if sq is None or A.squares[sq] != (a, a, A.vid(x), A.vid(y)):
            violations.append(Violation(law="identity square e_a", cells=[a]))
    return violations


def _totality_violations(A: DoubleCategory) -> list[Violation]:
    violations = []
    for b, a in A.hcomposable_pairs():
        c = A.hcomp(b, a)
        if c is None or A.hmors[c] != (A.hsrc(a), A.htgt(b)):
            violations.append(Violation(law="horizontal composition total", cells=[b, a]))
    for v, u in A.vcomposable_pairs():
        w = A.vcomp(v, u)
        if w is None or A.vmors[w] != (A.vsrc(u), A.vtgt(v)):
            violations.append(Violation(law="vertical composition total", cells=[v, u]))
    if violations:
        return violations
    for beta, alpha in A.square_hpairs():
        gamma = A.hcomp_sq(beta, alpha)
        expected = (
            A.hcomp(A.top(beta), A.top(alpha)),
            A.hcomp(A.bottom(beta), A.bottom(alpha)),
            A.left(alpha),
            A.right(beta),
        )
        if gamma is None or A.squares[gamma] != expected:
            violations.append(Violation(law="square horizontal composition total", cells=[beta, alpha]))
    for beta, alpha in A.square_vpairs():
        gamma = A.vcomp_sq(beta, alpha)
        expected = (
            A.top(alpha),
            A.bottom(beta),
            A.vcomp(A.left(beta), A.left(alpha)),
            A.vcomp(A.right(beta), A.right(alpha)),
        )
        if gamma is None or A.squares[gamma] != expected:
            violations.append(Violation(law="square vertical composition total", cells=[beta, alpha]))
    return violations


def _unit_violations(A: DoubleCategory, strict_horizontal: bool) -> list[Violation]:
    violations = []
    for u in sorted(A.vmors):
        x, y = A.vmors[u]
        if A.vcomp(u, A.vid(x)) != u or A.vcomp(A.vid(y), u) != u:
            violations.append(Violation(law="vertical unit", cells=[u]))
    for alpha in sorted(A.squares):
        top, bottom, left, right = A.squares[alpha]
        if A.vcomp_sq(alpha, A.e_square(top)) != alpha or A.vcomp_sq(A.e_square(bottom), alpha) != alpha:
            violations.append(Violation(law="square vertical unit", cells=[alpha]))
        if strict_horizontal and (
            A.hcomp_sq(alpha, A.id_square(left)) != alpha or A.hcomp_sq(A.id_square(right), alpha) != alpha
        ):
            violations.append(Violation(law="square horizontal unit", cells=[alpha]))
    if strict_horizontal:
        for a in sorted(A.hmors):
            x, y = A.hmors[a]
            if A.hcomp(a, A.hid(x)) != a or A.hcomp(A.hid(y), a) != a:
                violations.append(Violation(law="horizontal unit", cells=[a]))
    return violations


def _associativity_violations(A: DoubleCategory, strict_horizontal: bool) -> list[Violation]:
    violations = []
    for v, u in A.vcomposable_pairs():
        for w in A.vmors_from(A.vtgt(v)):
            if A.vcomp(w, A.vcomp(v, u)) != A.vcomp(A.vcomp(w, v), u):
                violations.append(Violation(law="vertical associativity", cells=[w, v, u]))
    for beta, alpha in A.square_vpairs():
        for gamma in A.squares_with_top(A.bottom(beta)):
            if A.vcomp_sq(gamma, A.vcomp_sq(beta, alpha)) != A.vcomp_sq(A.vcomp_sq(gamma, beta), alpha):
                violations.append(Violation(law="square vertical associativity", cells=[gamma, beta, alpha]))
    if not strict_horizontal:
        return violations
    for b, a in A.hcomposable_pairs():
        for c in A.hmors_from(A.htgt(b)):
            if A.hcomp(c, A.hcomp(b, a)) != A.hcomp(A.hcomp(c, b), a):
                violations.append(Violation(law="horizontal associativity", cells=[c, b, a]))
    for beta, alpha in A.square_hpairs():
        for gamma in A.squares_with_left(A.right(beta)):
            if A.hcomp_sq(gamma, A.hcomp_sq(beta, alpha)) != A.hcomp_sq(A.hcomp_sq(gamma, beta), alpha):
                violations.append(Violation(law="square horizontal associativity", cells=[gamma, beta, alpha]))
    return violations


def _interchange_violations(A: DoubleCategory) -> list[Violation]:
    # (δ•γ)∘(β•α) = (δ∘β)•(γ∘α) with α above γ and β above δ
    violations = []
    for beta, alpha in A.square_hpairs():
        for gamma in A.squares_with_top(A.bottom(alpha)):
            for delta in A.squares_with_top(A.bottom(beta)):
                if A.left(delta) != A.right(gamma):
                    continue
                left = A.hcomp_sq(A.vcomp_sq(delta, beta), A.vcomp_sq(gamma, alpha))
                right = A.vcomp_sq(A.hcomp_sq(delta, gamma), A.hcomp_sq(beta, alpha))
                if left != right:
                    violations.append(Violation(law="interchange", cells=[delta, gamma, beta, alpha]))
    return violations


def _identity_coherence_violations(A: DoubleCategory) -> list[Violation]:
    violations = []
    for b, a in A.hcomposable_pairs():
        if A.hcomp_sq(A.e_square(b), A.e_square(a)) != A.e_square(A.hcomp(b, a)):
            violations.append(Violation(law="identity squares compose horizontally", cells=[b, a]))
    for v, u in A.vcomposable_pairs():
        if A.vcomp_sq(A.id_square(v), A.id_square(u)) != A.id_square(A.vcomp(v, u)):
            violations.append(Violation(law="identity squares compose vertically", cells=[v, u]))
    for x in sorted(A.objects):
        if A.e_square(A.hid(x)) != A.id_square(A.vid(x)):
            violations.append(Violation(law="box identity", cells=[x]))
    return violations


def double_violations(A: DoubleCategory, strict_horizontal: bool = True) -> list[Violation]:
    """Law violations of a double category.

    With ``strict_horizontal`` False the horizontal unit and associativity
    laws are skipped; weak double categories replace them by coherence cells.
    Later groups of laws are only checked once earlier ones hold, since they
    read composites that may otherwise be missing.
    """
    violations = _boundary_violations(A)
    if not violations:
        violations = _totality_violations(A)
    if violations:
        return violations
    return [
        *_unit_violations(A, strict_horizontal),
        *_associativity_violations(A, strict_horizontal),
        *_interchange_violations(A),
        *_identity_coherence_violations(A),
    ]


def validate_double_category(A: DoubleCategory) -> ValidationReport:
    """List every violated double-category law; an empty report means valid.

    Raises:
        MalformedTable: if a table references an unknown id or an incomposable pair.
    """
    check_double_tables(A)
    violations = double_violations(A)
    if violations:
        logging.info(f"Double category {A.name!r} has {len(violations)} law violations")
    return ValidationReport(subject=A.name, violations=violations)

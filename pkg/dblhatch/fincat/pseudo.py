"""
The 2-category Ps[A, B] of 2-functors, pseudo natural transformations and
modifications between finite 2-categories.
"""

import logging
from itertools import product

from pydantic import BaseModel, ConfigDict

from dblhatch.errors import InternalInconsistency
from dblhatch.fincat.twocat import TwoCategory, TwoFunctor, enumerate_2functors
from dblhatch.utils.search import Budget, Constraint, ensure_budget, solve


class PseudoNaturalTransformation(BaseModel):
    """``σ: F ⇒ G`` with components ``σ_X: FX -> GX`` and invertible
    2-cells ``σ_f: Gf∘σ_X ⇒ σ_Y∘Ff``."""

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    components: dict[str, str]
    naturality: dict[str, str]

    def key(self) -> tuple:
        return (
            self.source,
            self.target,
            tuple(sorted(self.components.items())),
            tuple(sorted(self.naturality.items())),
        )


def _transformations(
    category: TwoCategory,
    source: TwoCategory,
    f_functor: TwoFunctor,
    g_functor: TwoFunctor,
    budget: Budget,
) -> list[dict]:
    B = category
    objects = sorted(source.objects)
    morphisms = sorted(source.morphisms)
    variables = [("ob", x) for x in objects] + [("mor", f) for f in morphisms]

    def domain(var, assignment):
        kind, cell = var
        if kind == "ob":
            return B.hom(f_functor.objects[cell], g_functor.objects[cell])
        x, y = source.morphisms[cell]
        top = B.compose(g_functor.morphisms[cell], assignment[("ob", x)])
        bottom = B.compose(assignment[("ob", y)], f_functor.morphisms[cell])
        return [t for t in B.cells_between(top, bottom) if B.is_invertible_cell(t)]

    constraints = []
    for x in objects:
        identity = source.identity(x)

        def unit(a, x=x, identity=identity):
            return a[("mor", identity)] == B.identity_cell(a[("ob", x)])

        constraints.append(Constraint(scope=(("ob", x), ("mor", identity)), check=unit, label="unit"))

    for g, f in source.composable_pairs():
        h = source.compose(g, f)
        x = source.src(f)

        def composite(a, g=g, f=f, h=h, x=x):
            expected = B.vcomp(
                B.hcomp(a[("mor", g)], B.identity_cell(f_functor.morphisms[f])),
                B.hcomp(B.identity_cell(g_functor.morphisms[g]), a[("mor", f)]),
            )
            return expected is not None and a[("mor", h)] == expected

        constraints.append(
            Constraint(
                scope=(("mor", g), ("mor", f), ("mor", h), ("ob", x)),
                check=composite,
                label="composition",
            )
        )

    for theta in sorted(source.cells):
        f, f2 = source.cells[theta]
        x, y = source.morphisms[f]

        def natural(a, theta=theta, f=f, f2=f2, x=x, y=y):
            left = B.vcomp(
                a[("mor", f2)], B.hcomp(g_functor.cells[theta], B.identity_cell(a[("ob", x)]))
            )
            right = B.vcomp(
                B.hcomp(B.identity_cell(a[("ob", y)]), f_functor.cells[theta]), a[("mor", f)]
            )
            return left is not None and left == right

        constraints.append(
            Constraint(
                scope=(("mor", f), ("mor", f2), ("ob", x), ("ob", y)),
                check=natural,
                label="naturality",
            )
        )
    return list(solve(variables, domain, constraints, budget))


def _modifications(
    B: TwoCategory,
    source: TwoCategory,
    functors: dict[str, TwoFunctor],
    sigma: PseudoNaturalTransformation,
    tau: PseudoNaturalTransformation,
    budget: Budget,
) -> list[dict[str, str]]:
    f_functor, g_functor = functors[sigma.source], functors[sigma.target]
    objects = sorted(source.objects)

    def domain(x, assignment):
        return B.cells_between(sigma.components[x], tau.components[x])

    constraints = []
    for f in sorted(source.morphisms):
        x, y = source.morphisms[f]

        def condition(a, f=f, x=x, y=y):
            left = B.vcomp(tau.naturality[f], B.hcomp(B.identity_cell(g_functor.morphisms[f]), a[x]))
            right = B.vcomp(B.hcomp(a[y], B.identity_cell(f_functor.morphisms[f])), sigma.naturality[f])
            return left is not None and left == right

        constraints.append(Constraint(scope=tuple(sorted({x, y})), check=condition, label="modification"))
    return list(solve(objects, domain, constraints, budget))


def pseudo_hom_2cat(
    source: TwoCategory, target: TwoCategory, budget: Budget | None = None
) -> TwoCategory:
    """Ps[A, B]: objects are all 2-functors, morphisms pseudo natural
    transformations, 2-cells modifications, all found exhaustively.

    Raises:
        BudgetExceeded: if the enumeration visits more nodes than allowed.
    """
    budget = ensure_budget(budget)
    B = target
    functors = {f.name: f for f in enumerate_2functors(source, target, budget)}
    names = list(functors)
    logging.info(f"Ps[{source.name}, {target.name}]: {len(names)} 2-functors")

    transformations: dict[str, PseudoNaturalTransformation] = {}
    by_key: dict[tuple, str] = {}
    for f_name, g_name in product(names, repeat=2):
        for solution in _transformations(B, source, functors[f_name], functors[g_name], budget):
            sigma = PseudoNaturalTransformation(
                source=f_name,
                target=g_name,
                components={x: v for (kind, x), v in solution.items() if kind == "ob"},
                naturality={f: v for (kind, f), v in solution.items() if kind == "mor"},
            )
            sid = f"s{len(transformations)}"
            transformations[sid] = sigma
            by_key[sigma.key()] = sid

    def lookup(sigma: PseudoNaturalTransformation) -> str:
        sid = by_key.get(sigma.key())
        if sid is None:
            raise InternalInconsistency("composite transformation was not enumerated")
        return sid

    identities = {}
    for name in names:
        functor = functors[name]
        identities[name] = lookup(
            PseudoNaturalTransformation(
                source=name,
                target=name,
                components={x: B.identity(functor.objects[x]) for x in source.objects},
                naturality={f: B.identity_cell(functor.morphisms[f]) for f in source.morphisms},
            )
        )

    composition = {}
    for s_id, t_id in product(sorted(transformations), repeat=2):
        sigma, tau = transformations[s_id], transformations[t_id]
        if sigma.target != tau.source:
            continue
        components = {x: B.compose(tau.components[x], sigma.components[x]) for x in source.objects}
        naturality = {}
        for f, (x, y) in source.morphisms.items():
            naturality[f] = B.vcomp(
                B.hcomp(B.identity_cell(tau.components[y]), sigma.naturality[f]),
                B.hcomp(tau.naturality[f], B.identity_cell(sigma.components[x])),
            )
        composite = PseudoNaturalTransformation(
            source=sigma.source, target=tau.target, components=components, naturality=naturality
        )
        composition[(t_id, s_id)] = lookup(composite)

    cells: dict[str, tuple[str, str]] = {}
    cell_components: dict[str, dict[str, str]] = {}
    cell_by_key: dict[tuple, str] = {}
    for s_id, t_id in product(sorted(transformations), repeat=2):
        sigma, tau = transformations[s_id], transformations[t_id]
        if (sigma.source, sigma.target) != (tau.source, tau.target):
            continue
        for components in _modifications(B, source, functors, sigma, tau, budget):
            mid = f"m{len(cells)}"
            cells[mid] = (s_id, t_id)
            cell_components[mid] = components
            cell_by_key[(s_id, t_id, tuple(sorted(components.items())))] = mid

    def cell_lookup(s_id: str, t_id: str, components: dict[str, str]) -> str:
        mid = cell_by_key.get((s_id, t_id, tuple(sorted(components.items()))))
        if mid is None:
            raise InternalInconsistency("composite modification was not enumerated")
        return mid

    cell_identities = {
        s_id: cell_lookup(
            s_id, s_id, {x: B.identity_cell(c) for x, c in transformations[s_id].components.items()}
        )
        for s_id in transformations
    }
    vertical = {}
    horizontal = {}
    for m1, m2 in product(sorted(cells), repeat=2):
        (s1, t1), (s2, t2) = cells[m1], cells[m2]
        if t1 == s2:
            vertical[(m2, m1)] = cell_lookup(
                s1, t2, {x: B.vcomp(cell_components[m2][x], cell_components[m1][x]) for x in source.objects}
            )
        if transformations[s1].target == transformations[s2].source:
            horizontal[(m2, m1)] = cell_lookup(
                composition[(s2, s1)],
                composition[(t2, t1)],
                {x: B.hcomp(cell_components[m2][x], cell_components[m1][x]) for x in source.objects},
            )

    return TwoCategory(
        name=f"Ps[{source.name},{target.name}]",
        objects=names,
        morphisms={sid: (t.source, t.target) for sid, t in transformations.items()},
        identities=identities,
        composition=composition,
        cells=cells,
        cell_identities=cell_identities,
        vertical_composition=vertical,
        horizontal_composition=horizontal,
    )

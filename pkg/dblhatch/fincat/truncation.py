"""
The functors D: Cat -> 2Cat (identity 2-cells only) and P: 2Cat -> Cat
(connected components of hom-categories).
"""

from networkx.utils import UnionFind

from dblhatch.fincat.category import CatFunctor, FinCategory
from dblhatch.fincat.twocat import TwoCategory, TwoFunctor


def identity_cell_name(f: str) -> str:
    return f"1_{f}"


def discrete_2cat(category: FinCategory) -> TwoCategory:
    cells = {identity_cell_name(f): (f, f) for f in category.morphisms}
    return TwoCategory(
        name=category.name,
        objects=list(category.objects),
        morphisms=dict(category.morphisms),
        identities=dict(category.identities),
        composition=dict(category.composition),
        cells=cells,
        cell_identities={f: identity_cell_name(f) for f in category.morphisms},
        vertical_composition={
            (identity_cell_name(f), identity_cell_name(f)): identity_cell_name(f)
            for f in category.morphisms
        },
        horizontal_composition={
            (identity_cell_name(g), identity_cell_name(f)): identity_cell_name(h)
            for (g, f), h in category.composition.items()
        },
    )


def discrete_functor(functor: CatFunctor) -> TwoFunctor:
    return TwoFunctor(
        name=functor.name,
        source=discrete_2cat(functor.source),
        target=discrete_2cat(functor.target),
        objects=dict(functor.objects),
        morphisms=dict(functor.morphisms),
        cells={identity_cell_name(f): identity_cell_name(g) for f, g in functor.morphisms.items()},
    )


def connected_morphisms(category: TwoCategory) -> dict[str, str]:
    """Representative of each morphism's component; the smallest id wins."""
    components = UnionFind(sorted(category.morphisms))
    for f, g in category.cells.values():
        components.union(f, g)
    representative = {}
    for component in components.to_sets():
        smallest = min(component)
        representative.update({f: smallest for f in component})
    return representative


def pi0_truncate(category: TwoCategory) -> FinCategory:
    representative = connected_morphisms(category)
    morphisms = {
        representative[f]: category.morphisms[f] for f in sorted(category.morphisms)
    }
    composition = {}
    for (g, f), h in sorted(category.composition.items()):
        composition[(representative[g], representative[f])] = representative[h]
    return FinCategory(
        name=category.name,
        objects=list(category.objects),
        morphisms=morphisms,
        identities={x: representative[f] for x, f in category.identities.items()},
        composition=composition,
    )


def pi0_functor(functor: TwoFunctor) -> CatFunctor:
    source_rep = connected_morphisms(functor.source)
    target_rep = connected_morphisms(functor.target)
    return CatFunctor(
        name=functor.name,
        source=pi0_truncate(functor.source),
        target=pi0_truncate(functor.target),
        objects=dict(functor.objects),
        morphisms={source_rep[f]: target_rep[g] for f, g in functor.morphisms.items()},
    )

"""
The internal hom [A, B] of double categories: double functors, horizontal
and vertical transformations and modifications, all enumerated exhaustively.

Passing ``pseudo=True`` gives [A, B]_ps with pseudo transformations in both
directions.
"""

import logging
from collections.abc import Callable
from itertools import product as pairs

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor, enumerate_double_functors
from dblhatch.dblcore.transformation import (
    HorizontalTransformation,
    Modification,
    VerticalTransformation,
    compose_horizontal,
    compose_vertical,
    enumerate_horizontal,
    enumerate_modifications,
    enumerate_vertical,
    hcompose_modifications,
    identity_horizontal,
    identity_modification_horizontal,
    identity_modification_vertical,
    identity_vertical,
    vcompose_modifications,
)
from dblhatch.errors import InternalInconsistency
from dblhatch.utils.search import Budget, ensure_budget


def _transformation_key(t: HorizontalTransformation | VerticalTransformation) -> tuple:
    return (t.source.name, t.target.name, *t.key()[1:])


class _Registry:
    """Ids handed out in enumeration order, looked up again by data key."""

    def __init__(self, prefix: str, key: Callable):
        self.prefix = prefix
        self.key = key
        self.items: dict[str, object] = {}
        self._ids: dict[tuple, str] = {}

    def add(self, item) -> str:
        ident = f"{self.prefix}{len(self.items)}"
        self.items[ident] = item
        self._ids[self.key(item)] = ident
        return ident

    def lookup(self, item) -> str:
        ident = self._ids.get(self.key(item))
        if ident is None:
            raise InternalInconsistency(f"a composite {self.prefix}-cell was not enumerated")
        return ident


class HomData:
    """The enumerated cells behind an internal hom, kept for callers that need
    the transformation data of a cell."""

    def __init__(self):
        self.functors: dict[str, DoubleFunctor] = {}
        self.horizontal = _Registry("h", _transformation_key)
        self.vertical = _Registry("r", _transformation_key)
        self.modifications = _Registry("m", self._modification_key)

    def _modification_key(self, mu: Modification) -> tuple:
        return (
            self.horizontal.lookup(mu.top),
            self.horizontal.lookup(mu.bottom),
            self.vertical.lookup(mu.left),
            self.vertical.lookup(mu.right),
            tuple(sorted(mu.components.items())),
        )


def internal_hom_data(
    A: DoubleCategory, B: DoubleCategory, pseudo: bool = False, budget: Budget | None = None
) -> tuple[DoubleCategory, HomData]:
    """[A, B] together with the data of its cells.

    Raises:
        BudgetExceeded: if the enumerations together visit more nodes than allowed.
    """
    budget = ensure_budget(budget)
    kind = "pseudo" if pseudo else "strict"
    data = HomData()
    for F in enumerate_double_functors(A, B, budget):
        data.functors[F.name] = F
    names = list(data.functors)
    logging.info(f"[{A.name}, {B.name}]: {len(names)} double functors")

    for f, g in pairs(names, repeat=2):
        F, G = data.functors[f], data.functors[g]
        for h in enumerate_horizontal(F, G, kind, budget):
            data.horizontal.add(h)
        for r in enumerate_vertical(F, G, kind, budget):
            data.vertical.add(r)
    H, R = data.horizontal.items, data.vertical.items

    for (h_id, h), (k_id, k) in pairs(sorted(H.items()), repeat=2):
        for (r_id, r), (s_id, s) in pairs(sorted(R.items()), repeat=2):
            if (r.source.name, r.target.name, s.source.name, s.target.name) != (
                h.source.name,
                k.source.name,
                h.target.name,
                k.target.name,
            ):
                continue
            for mu in enumerate_modifications(h, k, r, s, budget):
                data.modifications.add(mu)
    M = data.modifications.items
    logging.info(
        f"[{A.name}, {B.name}]: {len(H)} horizontal, {len(R)} vertical transformations, "
        f"{len(M)} modifications"
    )

    hcompositions, vcompositions = {}, {}
    for (k_id, k), (h_id, h) in pairs(sorted(H.items()), repeat=2):
        if h.target.name == k.source.name:
            hcompositions[(k_id, h_id)] = data.horizontal.lookup(compose_horizontal(k, h))
    for (s_id, s), (r_id, r) in pairs(sorted(R.items()), repeat=2):
        if r.target.name == s.source.name:
            vcompositions[(s_id, r_id)] = data.vertical.lookup(compose_vertical(s, r))

    square_hcompositions, square_vcompositions = {}, {}
    for (nu_id, nu), (mu_id, mu) in pairs(sorted(M.items()), repeat=2):
        if data.vertical.lookup(mu.right) == data.vertical.lookup(nu.left):
            square_hcompositions[(nu_id, mu_id)] = data.modifications.lookup(
                hcompose_modifications(nu, mu)
            )
        if data.horizontal.lookup(mu.bottom) == data.horizontal.lookup(nu.top):
            square_vcompositions[(nu_id, mu_id)] = data.modifications.lookup(
                vcompose_modifications(nu, mu)
            )

    hom = DoubleCategory(
        name=f"[{A.name},{B.name}]" + ("_ps" if pseudo else ""),
        objects=names,
        hmors={i: (h.source.name, h.target.name) for i, h in H.items()},
        vmors={i: (r.source.name, r.target.name) for i, r in R.items()},
        squares={
            i: (
                data.horizontal.lookup(mu.top),
                data.horizontal.lookup(mu.bottom),
                data.vertical.lookup(mu.left),
                data.vertical.lookup(mu.right),
            )
            for i, mu in M.items()
        },
        hidentities={f: data.horizontal.lookup(identity_horizontal(F, kind)) for f, F in data.functors.items()},
        videntities={f: data.vertical.lookup(identity_vertical(F, kind)) for f, F in data.functors.items()},
        hcompositions=hcompositions,
        vcompositions=vcompositions,
        hidentity_squares={
            i: data.modifications.lookup(identity_modification_vertical(r)) for i, r in R.items()
        },
        videntity_squares={
            i: data.modifications.lookup(identity_modification_horizontal(h)) for i, h in H.items()
        },
        square_hcompositions=square_hcompositions,
        square_vcompositions=square_vcompositions,
    )
    return hom, data


def internal_hom(
    A: DoubleCategory, B: DoubleCategory, pseudo: bool = False, budget: Budget | None = None
) -> DoubleCategory:
    """[A, B]; objects are the double functors ``A -> B`` (named ``F0``, ``F1``, ...)."""
    return internal_hom_data(A, B, pseudo, budget)[0]

"""
Freeness of finite categories and the "disjoint union of 𝟙 and 𝟚" shape test.
"""

import logging

import networkx as nx

from dblhatch.fincat.category import FinCategory
from dblhatch.utils.types import FreenessReport


def indecomposables(category: FinCategory) -> list[str]:
    """Non-identity morphisms that are not ``g∘f`` with both factors non-identity."""
    composites = {
        category.compose(g, f)
        for g, f in category.composable_pairs()
        if not category.is_identity(g) and not category.is_identity(f)
    }
    return [
        f
        for f in sorted(category.morphisms)
        if not category.is_identity(f) and f not in composites
    ]


def _generator_graph(category: FinCategory, generators: list[str]) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(sorted(category.objects))
    for f in generators:
        graph.add_edge(category.src(f), category.tgt(f), key=f)
    return graph


def _paths(category: FinCategory, graph: nx.MultiDiGraph) -> list[list[str]]:
    """Every non-empty path of generators in an acyclic generator graph."""
    paths: list[list[str]] = []
    frontier = [[f] for _, _, f in sorted(graph.edges(keys=True), key=lambda e: e[2])]
    while frontier:
        paths.extend(frontier)
        extended = []
        for path in frontier:
            end = category.tgt(path[-1])
            for _, _, f in sorted(graph.out_edges(end, keys=True), key=lambda e: e[2]):
                extended.append([*path, f])
        frontier = extended
    return paths


def is_free_category(category: FinCategory) -> FreenessReport:
    """Decide whether ``category`` is free on a graph.

    The only candidate generating graph is the graph of indecomposable
    morphisms. It must be acyclic, and evaluating paths in it must be a
    bijection onto the non-identity morphisms.
    """
    generators = indecomposables(category)
    graph = _generator_graph(category, generators)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        logging.debug(f"{category.name}: generator graph has a cycle {cycle}")
        return FreenessReport(
            free=False,
            generators=generators,
            reason="indecomposable graph has a directed cycle",
            counterexample=[key for _, _, key in cycle],
        )

    non_identities = {f for f in category.morphisms if not category.is_identity(f)}
    seen: dict[str, list[str]] = {}
    for path in _paths(category, graph):
        value = path[0]
        for f in path[1:]:
            value = category.compose(f, value)
        if value not in non_identities:
            return FreenessReport(
                free=False,
                generators=generators,
                reason="a path of generators composes to an identity",
                counterexample=path,
            )
        if value in seen:
            return FreenessReport(
                free=False,
                generators=generators,
                reason=f"{value} has two factorizations",
                counterexample=[value],
            )
        seen[value] = path
    missing = sorted(non_identities - set(seen))
    if missing:
        return FreenessReport(
            free=False,
            generators=generators,
            reason="morphisms not generated by the indecomposables",
            counterexample=missing,
        )
    return FreenessReport(free=True, generators=generators)


def is_disjoint_union_1_2(category: FinCategory) -> bool:
    """True iff every connected component is 𝟙 or the free arrow 𝟚."""
    graph = nx.Graph()
    graph.add_nodes_from(category.objects)
    non_identities = [f for f in category.morphisms if not category.is_identity(f)]
    for f in non_identities:
        graph.add_edge(*category.morphisms[f])
    for component in nx.connected_components(graph):
        inside = [f for f in non_identities if category.src(f) in component]
        if len(component) == 1 and not inside:
            continue
        if len(component) == 2 and len(inside) == 1 and category.src(inside[0]) != category.tgt(inside[0]):
            continue
        return False
    return True


def is_cofibrant_2category(category: FinCategory) -> FreenessReport:
    """A 2-category is cofibrant in the Lack model structure iff its
    underlying category is free."""
    return is_free_category(category.underlying())

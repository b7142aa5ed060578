"""
Finite cell structures presented as typed operation tables.

Categories, 2-categories, bicategories and (weak) double categories all
expose a ``presentation()``: an ordered tuple of cell kinds, the cell ids of
each kind, and a list of operation tables. Boundary operations (source,
target, square edges) are unary and total; the others (identities and
compositions) may be partial. A structure map is then just an id map per
kind that carries every table entry of the source to a table entry of the
target, which is what ``check_map`` validates and ``enumerate_maps``
searches for.
"""

import logging
from collections import Counter
from collections.abc import Callable, Iterator

from pydantic import BaseModel, ConfigDict, PrivateAttr

from dblhatch.errors import MalformedMap
from dblhatch.utils.search import Budget, Constraint, ensure_budget, solve
from dblhatch.utils.types import Violation

Mapping = dict[str, dict[str, str]]
Restriction = Callable[[str, str], set[str] | None]


class Operation(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    args: tuple[str, ...]
    result: str
    table: dict[tuple[str, ...], str]
    boundary: bool = False


class Presentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kinds: tuple[str, ...]
    cells: dict[str, list[str]]
    operations: list[Operation]

    _cache: dict = PrivateAttr(default_factory=dict)

    def operation(self, name: str) -> Operation:
        op = next((op for op in self.operations if op.name == name), None)
        if op is None:
            raise KeyError(name)
        return op

    def boundary_operations(self, kind: str) -> list[Operation]:
        return [op for op in self.operations if op.boundary and op.args == (kind,)]

    def boundary_signature(self, kind: str, cell: str) -> tuple[str, ...]:
        return tuple(op.table[(cell,)] for op in self.boundary_operations(kind))

    def boundary_index(self, kind: str) -> dict[tuple[str, ...], list[str]]:
        """Cells of ``kind`` grouped by their boundary, each group sorted."""
        key = ("boundary_index", kind)
        if key not in self._cache:
            index: dict[tuple[str, ...], list[str]] = {}
            for cell in sorted(self.cells[kind]):
                index.setdefault(self.boundary_signature(kind, cell), []).append(cell)
            self._cache[key] = index
        return self._cache[key]

    def producers(self) -> dict[tuple[str, str], list[tuple[Operation, tuple[str, ...]]]]:
        """Non-boundary table entries indexed by the cell they produce."""
        if "producers" not in self._cache:
            producers: dict[tuple[str, str], list[tuple[Operation, tuple[str, ...]]]] = {}
            for op in self.operations:
                if op.boundary:
                    continue
                for args, result in sorted(op.table.items()):
                    producers.setdefault((op.result, result), []).append((op, args))
            self._cache["producers"] = producers
        return self._cache["producers"]

    def signature(self, kind: str, cell: str) -> tuple[int, ...]:
        """Incidence counts of ``cell`` in every table position."""
        key = ("signatures", kind)
        if key not in self._cache:
            counters: dict[str, Counter] = {c: Counter() for c in self.cells[kind]}
            for i, op in enumerate(self.operations):
                for args, result in op.table.items():
                    for position, (arg_kind, arg) in enumerate(zip(op.args, args)):
                        if arg_kind == kind:
                            counters[arg][(i, position)] += 1
                    if op.result == kind:
                        counters[result][(i, -1)] += 1
            slots = sorted({slot for counter in counters.values() for slot in counter})
            self._cache[key] = {
                c: tuple(counter[slot] for slot in slots) for c, counter in counters.items()
            }
        return self._cache[key][cell]

    def plan(self) -> list[tuple[str, str, tuple[Operation, tuple[str, ...]] | None]]:
        """Assignment order for map searches.

        Kinds are assigned in declaration order. Within a kind, a cell whose
        value is forced by an identity or composition entry over already
        placed cells is placed as soon as possible; otherwise the next free
        cell is taken, true generators first.
        """
        if "plan" in self._cache:
            return self._cache["plan"]
        producers = self.producers()
        composite = {
            key
            for key, entries in producers.items()
            if any(key not in zip(op.args, args) for op, args in entries)
        }
        placed: set[tuple[str, str]] = set()
        order = []
        for kind in self.kinds:
            remaining = sorted(self.cells[kind])
            while remaining:
                choice, definer = None, None
                for cell in remaining:
                    definer = next(
                        (
                            (op, args)
                            for op, args in producers.get((kind, cell), [])
                            if all((k, a) in placed for k, a in zip(op.args, args))
                        ),
                        None,
                    )
                    if definer is not None:
                        choice = cell
                        break
                if choice is None:
                    choice = min(remaining, key=lambda c: ((kind, c) in composite, c))
                order.append((kind, choice, definer))
                placed.add((kind, choice))
                remaining.remove(choice)
        self._cache["plan"] = order
        return order

    def size(self) -> int:
        return sum(len(cells) for cells in self.cells.values())


def _entry_holds(
    target_table: dict[tuple[str, ...], str],
    arg_keys: tuple[tuple[str, str], ...],
    result_key: tuple[str, str],
) -> Callable[[dict], bool]:
    def check(assignment: dict) -> bool:
        image = tuple(assignment[key] for key in arg_keys)
        return target_table.get(image) == assignment[result_key]

    return check


def check_map(source: Presentation, target: Presentation, mapping: Mapping) -> list[Violation]:
    """Validate an id map between two presentations of the same signature.

    Raises:
        MalformedMap: if the map is partial, names unknown ids or breaks a boundary.

    Returns:
        The non-boundary table entries the map fails to preserve.
    """
    for kind in source.kinds:
        cell_map = mapping.get(kind, {})
        missing = sorted(set(source.cells[kind]) - set(cell_map))
        if missing:
            raise MalformedMap(f"map undefined on {kind} cells", missing)
        unknown = sorted(c for c, image in cell_map.items() if image not in target.cells[kind])
        if unknown:
            raise MalformedMap(f"{kind} cells sent to unknown ids", unknown)

    violations = []
    for op in source.operations:
        target_op = target.operation(op.name)
        for args, result in sorted(op.table.items()):
            image = tuple(mapping[k][a] for k, a in zip(op.args, args))
            if target_op.table.get(image) == mapping[op.result][result]:
                continue
            if op.boundary:
                raise MalformedMap(f"boundary {op.name} not preserved", [*args, result])
            violations.append(Violation(law=f"preserves {op.name}", cells=[*args, result]))
    return violations


def enumerate_maps(
    source: Presentation,
    target: Presentation,
    budget: Budget | None = None,
    restrict: Restriction | None = None,
    injective: bool = False,
    match_signatures: bool = False,
) -> Iterator[Mapping]:
    """Yield every structure map ``source -> target`` in deterministic order.

    Args:
        restrict: Optional hook ``(kind, cell) -> allowed images`` (None = no restriction).
        injective: Only yield maps injective on every kind.
        match_signatures: Only map cells to cells with equal incidence signatures.
    """
    budget = ensure_budget(budget)
    plan = source.plan()
    variables = [(kind, cell) for kind, cell, _ in plan]
    definers = {(kind, cell): definer for kind, cell, definer in plan}

    constraints = []
    for op in source.operations:
        target_table = target.operation(op.name).table
        for args, result in op.table.items():
            arg_keys = tuple(zip(op.args, args))
            result_key = (op.result, result)
            constraints.append(
                Constraint(
                    scope=(*arg_keys, result_key),
                    check=_entry_holds(target_table, arg_keys, result_key),
                    label=op.name,
                )
            )

    def domain(var: tuple[str, str], assignment: dict) -> list[str]:
        kind, cell = var
        definer = definers[var]
        if definer is not None:
            op, args = definer
            image = tuple(assignment[(k, a)] for k, a in zip(op.args, args))
            forced = target.operation(op.name).table.get(image)
            candidates = [forced] if forced is not None else []
        else:
            signature = tuple(
                assignment[(op.result, op.table[(cell,)])]
                for op in source.boundary_operations(kind)
            )
            candidates = target.boundary_index(kind).get(signature, [])
        if restrict is not None:
            allowed = restrict(kind, cell)
            if allowed is not None:
                candidates = [c for c in candidates if c in allowed]
        if injective:
            used = {value for (k, _), value in assignment.items() if k == kind}
            candidates = [c for c in candidates if c not in used]
        if match_signatures:
            wanted = source.signature(kind, cell)
            candidates = [c for c in candidates if target.signature(kind, c) == wanted]
        return candidates

    for solution in solve(variables, domain, constraints, budget):
        mapping: Mapping = {kind: {} for kind in source.kinds}
        for (kind, cell), value in solution.items():
            mapping[kind][cell] = value
        yield mapping


def find_isomorphism(
    source: Presentation, target: Presentation, budget: Budget | None = None
) -> Mapping | None:
    """Backtracking bijection search with incidence-signature pruning."""
    if source.kinds != target.kinds:
        return None
    for kind in source.kinds:
        if len(source.cells[kind]) != len(target.cells[kind]):
            return None
        left = Counter(source.signature(kind, c) for c in source.cells[kind])
        right = Counter(target.signature(kind, c) for c in target.cells[kind])
        if left != right:
            return None
    for op in source.operations:
        if len(op.table) != len(target.operation(op.name).table):
            return None
    found = next(
        enumerate_maps(source, target, budget, injective=True, match_signatures=True), None
    )
    logging.debug(f"Isomorphism search {'succeeded' if found else 'failed'}")
    return found

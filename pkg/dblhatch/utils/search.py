"""
Budgeted backtracking search.

Every exhaustive search in dblhatch (functor enumeration, lifting problems,
transformation and witness searches, isomorphism tests) is expressed as a
list of variables, a domain function and a set of constraints, and is
solved by the iterative backtracker below. Candidates are tried in the
order the domain function yields them, so results are deterministic.
"""

import logging
from collections.abc import Callable, Hashable, Iterable, Iterator
from typing import Any

from pydantic import BaseModel, ConfigDict

from dblhatch.config import get_settings
from dblhatch.errors import BudgetExceeded

Assignment = dict[Hashable, Any]


class Budget:
    """Counter of visited search nodes, shared by all sub-searches of one operation."""

    def __init__(self, limit: int | None = None):
        self.limit = limit if limit is not None else get_settings().budget
        self.spent = 0

    def charge(self, nodes: int = 1) -> None:
        self.spent += nodes
        if self.spent > self.limit:
            logging.warning(f"Search budget exhausted: {self.spent} > {self.limit}")
            raise BudgetExceeded(self.limit, self.spent)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)

    def __repr__(self) -> str:
        return f"Budget(limit={self.limit}, spent={self.spent})"


def ensure_budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()


class Constraint(BaseModel):
    """A predicate over the variables in ``scope``.

    It is evaluated as soon as every variable of its scope is assigned.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scope: tuple[Hashable, ...]
    check: Callable[[Assignment], bool]
    label: str = ""


def attach_constraints(
    variables: list[Hashable], constraints: Iterable[Constraint]
) -> dict[Hashable, list[Constraint]]:
    """Index each constraint under the latest variable of its scope."""
    position = {var: i for i, var in enumerate(variables)}
    attached: dict[Hashable, list[Constraint]] = {var: [] for var in variables}
    for constraint in constraints:
        scope = [var for var in constraint.scope if var in position]
        if len(scope) != len(constraint.scope):
            raise KeyError(f"constraint {constraint.label!r} mentions an unknown variable")
        if not scope:
            continue
        last = max(scope, key=position.__getitem__)
        attached[last].append(constraint)
    return attached


def solve(
    variables: list[Hashable],
    domain: Callable[[Hashable, Assignment], Iterable[Any]],
    constraints: Iterable[Constraint] = (),
    budget: Budget | None = None,
) -> Iterator[Assignment]:
    """Yield every complete assignment satisfying all constraints.

    Args:
        variables: Variables in assignment order.
        domain: Candidate values of a variable given the partial assignment.
        constraints: Predicates checked once their scope is assigned.
        budget: Node counter; one node is charged per candidate tried.

    Yields:
        Fresh dicts mapping every variable to a value.
    """
    budget = ensure_budget(budget)
    attached = attach_constraints(variables, constraints)
    if not variables:
        yield {}
        return

    assignment: Assignment = {}
    stack: list[Iterator[Any]] = [iter(domain(variables[0], assignment))]
    while stack:
        depth = len(stack) - 1
        var = variables[depth]
        try:
            value = next(stack[-1])
        except StopIteration:
            stack.pop()
            assignment.pop(var, None)
            continue

        budget.charge()
        assignment[var] = value
        if not all(constraint.check(assignment) for constraint in attached[var]):
            continue
        if depth + 1 == len(variables):
            yield dict(assignment)
            continue
        stack.append(iter(domain(variables[depth + 1], assignment)))


def first(solutions: Iterator[Assignment]) -> Assignment | None:
    return next(solutions, None)

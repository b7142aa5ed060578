"""
Tests for the budgeted backtracking search and the structure-map layer.
"""

import pytest

from dblhatch.config import get_settings
from dblhatch.errors import BudgetExceeded, MalformedMap
from dblhatch.fincat.shapes import arrow_category, chain_category, isomorphism_category
from dblhatch.utils.search import Budget, Constraint, attach_constraints, solve
from dblhatch.utils.structure import check_map, enumerate_maps, find_isomorphism


class TestSolve:
    """Test cases for the generic backtracker."""

    def test_solutions_in_domain_order(self):
        """Test that every solution is found, in the order the domain yields values."""
        less = Constraint(scope=("x", "y"), check=lambda a: a["x"] < a["y"], label="less")
        found = list(solve(["x", "y"], lambda var, a: [0, 1, 2], [less]))

        assert found == [{"x": 0, "y": 1}, {"x": 0, "y": 2}, {"x": 1, "y": 2}]

    def test_no_variables_yields_one_empty_assignment(self):
        """Test that the empty problem has exactly the empty solution."""
        assert list(solve([], lambda var, a: [])) == [{}]

    def test_empty_domain_has_no_solutions(self):
        """Test that an empty domain prunes the whole search."""
        assert list(solve(["x", "y"], lambda var, a: [] if var == "y" else [0, 1])) == []

    def test_constraint_on_unknown_variable(self):
        """Test that a constraint naming an undeclared variable is rejected."""
        stray = Constraint(scope=("z",), check=lambda a: True, label="stray")

        with pytest.raises(KeyError):
            attach_constraints(["x"], [stray])

    def test_constraint_attached_to_latest_variable(self):
        """Test that constraints are checked as soon as their scope is assigned."""
        both = Constraint(scope=("y", "x"), check=lambda a: True)
        attached = attach_constraints(["x", "y", "z"], [both])

        assert attached["y"] == [both]
        assert attached["x"] == [] and attached["z"] == []


class TestBudget:
    """Test cases for search budgets."""

    def test_budget_exceeded(self):
        """Test that a search stops with BudgetExceeded once the limit is passed."""
        with pytest.raises(BudgetExceeded) as info:
            list(solve(["x", "y", "z"], lambda var, a: [0, 1], budget=Budget(3)))

        assert info.value.limit == 3
        assert info.value.spent == 4

    def test_budget_shared_between_searches(self):
        """Test that one budget counts the nodes of several searches."""
        budget = Budget(100)
        list(solve(["x"], lambda var, a: [0, 1, 2], budget=budget))
        list(solve(["x"], lambda var, a: [0, 1], budget=budget))

        assert budget.spent == 5
        assert budget.remaining == 95

    def test_default_limit_from_environment(self, monkeypatch):
        """Test that DBLHATCH_BUDGET sets the default budget."""
        monkeypatch.setenv("DBLHATCH_BUDGET", "7")
        get_settings.cache_clear()

        assert Budget().limit == 7

    def test_log_level_from_environment(self, monkeypatch):
        """Test that DBLHATCH_LOG_LEVEL is read and upper-cased."""
        monkeypatch.setenv("DBLHATCH_LOG_LEVEL", "debug")
        get_settings.cache_clear()

        assert get_settings().log_level == "DEBUG"


class TestStructureMaps:
    """Test cases for presentations, map checks and map enumeration."""

    def test_check_map_accepts_identity(self):
        """Test that the identity map preserves every table."""
        chain = chain_category()
        identity = {
            "ob": {x: x for x in chain.objects},
            "mor": {f: f for f in chain.morphisms},
        }

        assert check_map(chain.presentation(), chain.presentation(), identity) == []

    def test_check_map_rejects_partial_map(self):
        """Test that a map undefined on some cell raises MalformedMap."""
        arrow = arrow_category()

        with pytest.raises(MalformedMap) as info:
            check_map(arrow.presentation(), arrow.presentation(), {"ob": {"0": "0"}, "mor": {}})

        assert "1" in info.value.cells

    def test_check_map_rejects_broken_boundary(self):
        """Test that a map moving a morphism off its ends raises MalformedMap."""
        arrow = arrow_category()
        mapping = {
            "ob": {"0": "0", "1": "1"},
            "mor": {"f": "id_0", "id_0": "id_0", "id_1": "id_1"},
        }

        with pytest.raises(MalformedMap):
            check_map(arrow.presentation(), arrow.presentation(), mapping)

    def test_enumerate_maps_counts_functors(self):
        """Test that there are exactly three functors from the arrow to itself."""
        arrow = arrow_category()

        assert len(list(enumerate_maps(arrow.presentation(), arrow.presentation()))) == 3

    def test_enumerate_maps_respects_restriction(self):
        """Test that the restriction hook pins images."""
        arrow = arrow_category()
        maps = list(
            enumerate_maps(
                arrow.presentation(),
                arrow.presentation(),
                restrict=lambda kind, cell: {"f"} if cell == "f" else None,
            )
        )

        assert len(maps) == 1
        assert maps[0]["mor"]["f"] == "f"

    def test_find_isomorphism(self):
        """Test that isomorphic and non-isomorphic categories are told apart."""
        iso = isomorphism_category()

        assert find_isomorphism(iso.presentation(), iso.presentation()) is not None
        assert find_isomorphism(iso.presentation(), chain_category().presentation()) is None

"""
Tests for double categories, double functors and the product, coproduct
and transpose operations.
"""

import pytest

from dblhatch.dblcore import shapes
from dblhatch.dblcore.builder import DoubleCategoryBuilder
from dblhatch.dblcore.double import validate_double_category
from dblhatch.dblcore.functor import (
    DoubleFunctor,
    are_isomorphic,
    compose_double_functors,
    constant_functor,
    enumerate_double_functors,
    find_double_isomorphism,
    identity_double_functor,
    terminal_functor,
    validate_double_functor,
)
from dblhatch.dblcore.ops import (
    copair,
    coproduct,
    coproduct_injection,
    product,
    product_projection,
    transpose,
    transpose_functor,
)
from dblhatch.errors import MalformedMap, MalformedTable
from dblhatch.fincat.free import is_free_category


class TestDoubleCategory:
    """Test cases for finite double categories."""

    def test_free_square_cells(self, square):
        """Test the cell counts of 𝕊, identities included."""
        assert len(square.objects) == 4
        assert len(square.hmors) == 6
        assert len(square.vmors) == 6
        assert set(square.squares) == {
            "alpha",
            "e_a",
            "e_b",
            "id_u",
            "id_v",
            "box_0",
            "box_1",
            "box_2",
            "box_3",
        }

    @pytest.mark.parametrize(
        "factory",
        [
            shapes.point,
            shapes.empty_double_category,
            shapes.two_points,
            shapes.horizontal_arrow,
            shapes.vertical_arrow,
            shapes.horizontal_chain,
            shapes.vertical_chain,
            shapes.square_boundary,
            shapes.free_square,
            shapes.parallel_squares,
        ],
    )
    def test_builtin_shapes_are_valid(self, factory):
        """Test that every builtin shape satisfies the double category laws."""
        assert validate_double_category(factory()).valid

    def test_identity_squares(self, square):
        """Test the identity square accessors and the box."""
        assert square.e_square("a") == "e_a"
        assert square.id_square("u") == "id_u"
        assert square.box("0") == "box_0"
        assert square.e_square("id_0") == square.id_square("e_0") == "box_0"

    def test_missing_square_composite(self, square):
        """Test that dropping alpha•e_a is reported as a totality failure."""
        vertical = {k: v for k, v in square.square_vcompositions.items() if k != ("alpha", "e_a")}
        broken = square.model_copy(update={"square_vcompositions": vertical})

        report = validate_double_category(broken)

        assert "square vertical composition total" in report.laws()
        assert any(v.cells == ["alpha", "e_a"] for v in report.violations)

    def test_unknown_boundary(self, square):
        """Test that a square on an unknown morphism raises MalformedTable."""
        broken = square.model_copy(update={"squares": {**square.squares, "beta": ("a", "c", "u", "v")}})

        with pytest.raises(MalformedTable):
            validate_double_category(broken)

    def test_square_boundary_mismatch(self):
        """Test that a square whose corners do not meet is reported."""
        broken = (
            DoubleCategoryBuilder("B")
            .hmor("a", "0", "1")
            .hmor("b", "2", "3")
            .vmor("u", "0", "2")
            .vmor("v", "0", "3")
            .square("beta", top="a", bottom="b", left="u", right="v")
            .build()
        )

        report = validate_double_category(broken)

        assert report.first().law == "square boundary"
        assert report.first().cells == ["beta"]

    def test_vertical_inverse(self, one):
        """Test that the box is its own vertical inverse."""
        assert one.vertical_inverse("box_0") == "box_0"

    def test_underlying_categories(self, square):
        """Test that both underlying categories of 𝕊 are free."""
        assert is_free_category(square.horizontal_category()).free
        assert is_free_category(square.vertical_category()).free


class TestDoubleFunctor:
    """Test cases for strict double functors."""

    def test_endofunctors_of_horizontal_arrow(self, two_h):
        """Test that ℍ𝟚 has three endofunctors, all valid."""
        functors = list(enumerate_double_functors(two_h, two_h))

        assert len(functors) == 3
        assert [F.name for F in functors] == ["F0", "F1", "F2"]
        assert all(validate_double_functor(F).valid for F in functors)

    def test_identity_and_composition(self, square):
        """Test that composing identities gives the identity map."""
        identity = identity_double_functor(square)

        assert compose_double_functors(identity, identity).mapping() == identity.mapping()

    def test_broken_boundary(self, two_h):
        """Test that a map moving a off its ends raises MalformedMap."""
        identity = identity_double_functor(two_h)
        broken = identity.model_copy(update={"hmors": {**identity.hmors, "a": "id_0"}})

        with pytest.raises(MalformedMap):
            validate_double_functor(broken)

    def test_constant_and_terminal_functors(self, square, one):
        """Test the constant functor and the functor to 𝟙."""
        assert validate_double_functor(terminal_functor(square, one)).valid
        assert validate_double_functor(constant_functor(one, square, "3")).valid

    def test_isomorphism_search(self, square, parallel_squares):
        """Test that isomorphic double categories are recognised and 𝕊 ≇ 𝕊₂."""
        renamed = square.model_copy(update={"name": "other"})

        iso = find_double_isomorphism(square, renamed)

        assert isinstance(iso, DoubleFunctor)
        assert validate_double_functor(iso).valid
        assert not are_isomorphic(square, parallel_squares)


class TestOperations:
    """Test cases for products, coproducts and transposition."""

    def test_product(self, two_h, two_v):
        """Test that ℍ𝟚×𝕍𝟚 is a valid double category with paired cells."""
        P = product(two_h, two_v)

        assert len(P.objects) == 4
        assert len(P.squares) == len(two_h.squares) * len(two_v.squares)
        assert validate_double_category(P).valid
        assert validate_double_functor(product_projection(two_h, two_v, 0)).valid
        assert validate_double_functor(product_projection(two_h, two_v, 1)).valid

    def test_coproduct(self, one, one_one):
        """Test that 𝟙⊔𝟙 built by coproduct is the two-point double category."""
        C = coproduct(one, one)

        assert validate_double_category(C).valid
        assert are_isomorphic(C, one_one)
        assert validate_double_functor(coproduct_injection(one, one, 1)).valid

    def test_transpose_swaps_directions(self, two_h, two_v):
        """Test that the transpose of ℍ𝟚 is 𝕍𝟚."""
        assert are_isomorphic(transpose(two_h), two_v)

    def test_copair(self, one, two_h):
        """Test that the copairing of the two points of ℍ𝟚 is a valid functor out of 𝟙⊔𝟙."""
        F = copair(constant_functor(one, two_h, "0"), constant_functor(one, two_h, "1"))

        assert F.objects == {"0@0": "0", "0@1": "1"}
        assert validate_double_functor(F).valid

    def test_transpose_is_involution(self, square):
        """Test that transposing twice gives back the same tables and name."""
        assert transpose(transpose(square)).model_dump() == square.model_dump()

    def test_transpose_functor(self, two_h):
        """Test that transposed functors stay valid."""
        F = next(enumerate_double_functors(two_h, two_h))

        assert validate_double_functor(transpose_functor(F)).valid

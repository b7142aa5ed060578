"""
Tests for finite categories, freeness and the 𝟙/𝟚 shape test.
"""

import pytest

from dblhatch.errors import MalformedTable
from dblhatch.fincat import shapes
from dblhatch.fincat.builder import CategoryBuilder
from dblhatch.fincat.category import (
    CatFunctor,
    enumerate_functors,
    functor_image,
    identity_functor,
    is_category_equivalence,
    is_isofibration,
    validate_category,
    validate_functor,
)
from dblhatch.fincat.free import indecomposables, is_disjoint_union_1_2, is_free_category


def _collapse(source, target) -> CatFunctor:
    (x,) = target.objects
    return CatFunctor(
        name="collapse",
        source=source,
        target=target,
        objects={y: x for y in source.objects},
        morphisms={f: target.identity(x) for f in source.morphisms},
    )


class TestFinCategory:
    """Test cases for building and validating finite categories."""

    def test_builder_generates_identities(self):
        """Test that identities and unit composites are generated."""
        arrow = shapes.arrow_category()

        assert set(arrow.morphisms) == {"f", "id_0", "id_1"}
        assert arrow.compose("f", "id_0") == "f"
        assert arrow.compose("id_1", "f") == "f"
        assert arrow.compose("id_0", "id_0") == "id_0"

    def test_named_shapes_are_valid(self):
        """Test that every builtin category satisfies the category laws."""
        for category in (
            shapes.terminal_category(),
            shapes.arrow_category(),
            shapes.chain_category(),
            shapes.isomorphism_category(),
            shapes.commutative_square_category(),
            shapes.idempotent_category(),
        ):
            assert validate_category(category).valid, category.name

    def test_missing_composite(self):
        """Test that an undeclared composite is reported with its factors."""
        broken = CategoryBuilder("B").morphism("f", "0", "1").morphism("g", "1", "2").build()

        report = validate_category(broken)

        assert not report.valid
        assert report.first().law == "composition total"
        assert report.first().cells == ["g", "f"]

    def test_unknown_id_in_table(self):
        """Test that a composite naming an unknown morphism raises MalformedTable."""
        chain = shapes.chain_category()
        broken = chain.model_copy(update={"composition": {**chain.composition, ("g", "f"): "nope"}})

        with pytest.raises(MalformedTable):
            validate_category(broken)

    def test_conflicting_declarations(self):
        """Test that the builder refuses two values for one composite."""
        builder = CategoryBuilder("B").morphism("f", "0", "1").compose("id_1", "f", "g").morphism("g", "0", "1")

        with pytest.raises(MalformedTable):
            builder.build()

    def test_inverse(self):
        """Test two-sided inverses."""
        assert shapes.isomorphism_category().inverse("f") == "g"
        assert shapes.arrow_category().inverse("f") is None


class TestFunctors:
    """Test cases for functors between finite categories."""

    def test_enumerate_endofunctors_of_arrow(self):
        """Test that the arrow has three endofunctors."""
        arrow = shapes.arrow_category()

        functors = list(enumerate_functors(arrow, arrow))

        assert len(functors) == 3
        assert all(validate_functor(F).valid for F in functors)

    def test_identity_functor_is_equivalence(self):
        """Test that identities are equivalences."""
        assert is_category_equivalence(identity_functor(shapes.chain_category()))

    def test_isomorphism_collapses_to_point(self):
        """Test that the free isomorphism is equivalent to the terminal category."""
        collapse = _collapse(shapes.isomorphism_category(), shapes.terminal_category())

        assert validate_functor(collapse).valid
        assert is_category_equivalence(collapse)
        assert is_isofibration(collapse)

    def test_image(self):
        """Test that the collapse of the free isomorphism hits only the point and its identity."""
        collapse = _collapse(shapes.isomorphism_category(), shapes.terminal_category())

        assert functor_image(collapse) == {"ob": ["0"], "mor": ["id_0"]}
        assert functor_image(identity_functor(shapes.arrow_category()))["mor"] == ["f", "id_0", "id_1"]

    def test_arrow_does_not_collapse(self):
        """Test that the arrow is not equivalent to the terminal category."""
        assert not is_category_equivalence(_collapse(shapes.arrow_category(), shapes.terminal_category()))

    def test_inclusion_of_point_into_iso_is_not_isofibration(self):
        """Test that an isomorphism into the image without a lift is detected."""
        point, iso = shapes.terminal_category(), shapes.isomorphism_category()
        inclusion = CatFunctor(
            name="incl", source=point, target=iso, objects={"0": "0"}, morphisms={"id_0": "id_0"}
        )

        assert validate_functor(inclusion).valid
        assert not is_isofibration(inclusion)


class TestFreeness:
    """Test cases for free categories."""

    @pytest.mark.parametrize(
        "factory",
        [shapes.terminal_category, shapes.arrow_category, shapes.chain_category],
    )
    def test_free(self, factory):
        """Test categories free on a graph."""
        assert is_free_category(factory()).free

    def test_chain_generators(self):
        """Test that the generators of 𝟛 are its two indecomposable arrows."""
        assert indecomposables(shapes.chain_category()) == ["f", "g"]

    def test_isomorphism_is_not_free(self):
        """Test that a generator cycle is reported."""
        report = is_free_category(shapes.isomorphism_category())

        assert not report.free
        assert sorted(report.counterexample) == ["f", "g"]

    def test_commutative_square_is_not_free(self):
        """Test that a morphism with two factorizations is reported."""
        report = is_free_category(shapes.commutative_square_category())

        assert not report.free
        assert report.counterexample == ["d"]

    def test_idempotent_is_not_free(self):
        """Test that a morphism generated by nothing is reported."""
        report = is_free_category(shapes.idempotent_category())

        assert not report.free
        assert report.counterexample == ["x"]

    def test_disjoint_union_of_points_and_arrows(self):
        """Test the 𝟙/𝟚 component shape test."""
        assert is_disjoint_union_1_2(shapes.discrete_category("0", "1"))
        assert is_disjoint_union_1_2(shapes.arrow_category())
        assert not is_disjoint_union_1_2(shapes.chain_category())
        assert not is_disjoint_union_1_2(shapes.isomorphism_category())
        assert not is_disjoint_union_1_2(shapes.idempotent_category())

"""
Tests for horizontal and vertical transformations and modifications.
"""

from dblhatch.dblcore.functor import constant_functor, identity_double_functor, terminal_functor
from dblhatch.dblcore.transformation import (
    compose_horizontal,
    enumerate_horizontal,
    enumerate_vertical,
    identity_horizontal,
    identity_modification_horizontal,
    verify_modification,
    verify_transformation,
    whisker_functor_left,
    whisker_functor_right,
)


class TestHorizontalTransformation:
    """Test cases for transformations with horizontal components."""

    def test_between_constant_functors(self, one, two_h):
        """Test that a: 0 -> 1 gives the only transformation const_0 ⇒ const_1."""
        const_0 = constant_functor(one, two_h, "0")
        const_1 = constant_functor(one, two_h, "1")

        found = list(enumerate_horizontal(const_0, const_1))

        assert len(found) == 1
        assert found[0].components == {"0": "a"}
        assert found[0].hmor_squares == {"id_0": "e_a"}
        assert verify_transformation(found[0]).valid

    def test_no_transformation_backwards(self, one, two_h):
        """Test that nothing goes from const_1 to const_0."""
        const_0 = constant_functor(one, two_h, "0")
        const_1 = constant_functor(one, two_h, "1")

        assert list(enumerate_horizontal(const_1, const_0)) == []

    def test_identity_transformation(self, square):
        """Test that the identity transformation verifies and is a unit for composition."""
        identity = identity_horizontal(identity_double_functor(square))

        assert verify_transformation(identity).valid
        assert compose_horizontal(identity, identity).key() == identity.key()

    def test_pseudo_includes_strict(self, square):
        """Test that the identity is among the pseudo transformations of the identity functor."""
        F = identity_double_functor(square)

        found = [t.key() for t in enumerate_horizontal(F, F, kind="pseudo")]

        assert identity_horizontal(F, "pseudo").key() in found

    def test_broken_component(self, one, two_h):
        """Test that a component with the wrong ends is reported."""
        const_0 = constant_functor(one, two_h, "0")
        const_1 = constant_functor(one, two_h, "1")
        (t,) = enumerate_horizontal(const_0, const_1)
        broken = t.model_copy(update={"components": {"0": "id_0"}})

        report = verify_transformation(broken)

        assert not report.valid
        assert report.first().law == "component boundary"


class TestVerticalTransformation:
    """Test cases for transformations with vertical components."""

    def test_between_constant_functors(self, one, two_v):
        """Test that u: 0 => 1 gives the only vertical transformation const_0 ⇒ const_1."""
        const_0 = constant_functor(one, two_v, "0")
        const_1 = constant_functor(one, two_v, "1")

        found = list(enumerate_vertical(const_0, const_1))

        assert len(found) == 1
        assert found[0].components == {"0": "u"}
        assert verify_transformation(found[0]).valid


class TestModification:
    """Test cases for modifications."""

    def test_identity_modification(self, two_h):
        """Test that the identity modification on the identity transformation verifies."""
        identity = identity_horizontal(identity_double_functor(two_h))

        assert verify_modification(identity_modification_horizontal(identity)).valid


class TestWhiskering:
    """Test cases for whiskering transformations by strict functors."""

    def test_whisker_left_by_identity(self, one, two_h):
        """Test that whiskering by the identity keeps the components."""
        (t,) = enumerate_horizontal(constant_functor(one, two_h, "0"), constant_functor(one, two_h, "1"))

        whiskered = whisker_functor_left(identity_double_functor(two_h), t)

        assert whiskered.components == t.components
        assert verify_transformation(whiskered).valid

    def test_whisker_right_by_collapse(self, one, two_h, square):
        """Test that precomposing with 𝕊 -> 𝟙 repeats the component at every object."""
        (t,) = enumerate_horizontal(constant_functor(one, two_h, "0"), constant_functor(one, two_h, "1"))

        whiskered = whisker_functor_right(t, terminal_functor(square, one))

        assert whiskered.components == {x: "a" for x in square.objects}
        assert verify_transformation(whiskered).valid

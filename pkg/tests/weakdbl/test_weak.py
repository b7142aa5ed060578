"""
Tests for weak double categories, strictification and the weak
biequivalence and cofibrancy checks.
"""

from dblhatch.construct.vertical import vertical_morphism_2cat
from dblhatch.dblcore.functor import are_isomorphic
from dblhatch.fincat.twocat import validate_2category, validate_bicategory
from dblhatch.weakdbl.checks import (
    COFIBRANT_SUFFICIENT,
    UNKNOWN,
    check_double_biequivalence_weak,
    is_cofibrant_weak,
    is_free_magma,
)
from dblhatch.weakdbl.double import as_weak, validate_weak
from dblhatch.weakdbl.embed import (
    horizontal_embed_weak,
    underlying_horizontal_weak,
    vertical_morphism_bicat,
)
from dblhatch.weakdbl.strictify import strictify, strictify_bicategory


class TestWeakDoubleCategory:
    """Test cases for the coherence verifier."""

    def test_builtin_weak_shapes_are_valid(self, w, bracketed):
        """Test that W and Bracket satisfy every coherence law."""
        assert validate_weak(w).valid
        assert validate_weak(bracketed).valid

    def test_strict_input_is_valid(self, square):
        """Test that a strict double category with identity coherence is weak."""
        assert validate_weak(as_weak(square)).valid

    def test_broken_triangle(self, w):
        """Test that making the left unitor trivial breaks the triangle law in W."""
        broken = w.model_copy(update={"left_unitors": {"id_0": "box_0"}})

        assert "triangle" in validate_weak(broken).laws()

    def test_associator_with_wrong_boundary(self, bracketed):
        """Test that an associator that is not a square (c∘b)∘a ⇒ c∘(b∘a) is reported."""
        associators = {**bracketed.associators, ("a", "b", "c"): "e_cb_a"}
        broken = bracketed.model_copy(update={"associators": associators})

        report = validate_weak(broken)

        assert report.first().law == "associator"
        assert report.first().cells == ["a", "b", "c"]


class TestEmbeddings:
    """Test cases for ℍ^w, 𝐇^w and 𝒱^w."""

    def test_underlying_bicategory(self, w):
        """Test that 𝐇^w W is a valid bicategory whose unitors are delta."""
        H = underlying_horizontal_weak(w)

        assert validate_bicategory(H).valid
        assert H.left_unitors == {"id_0": "delta"}

    def test_embedding_round_trip(self, w):
        """Test that ℍ^w 𝐇^w W is again a valid weak double category."""
        assert validate_weak(horizontal_embed_weak(underlying_horizontal_weak(w))).valid

    def test_vertical_bicategory_of_strict_input(self, square):
        """Test that 𝒱^w agrees with 𝒱 on a strict input and has identity coherence cells."""
        V, Vw = vertical_morphism_2cat(square), vertical_morphism_bicat(square)

        assert Vw.cells == V.cells
        assert Vw.composition == V.composition
        assert set(Vw.left_unitors.values()) <= set(V.cell_identities.values())
        assert set(Vw.associators.values()) <= set(V.cell_identities.values())


class TestStrictify:
    """Test cases for the strictification quotient."""

    def test_self_inverse_unitor_collapses(self, w, one):
        """Test that S(W) is the point, delta being identified with the box."""
        result = strictify(w)

        assert are_isomorphic(result.strict, one)
        assert result.unit.squares == {"box_0": "box_0", "delta": "box_0"}

    def test_bracketings_are_identified(self, bracketed):
        """Test that S(Bracket) identifies the two bracketings and their coherence squares."""
        result = strictify(bracketed)

        assert result.unit.hmors["cb_a"] == result.unit.hmors["c_ba"]
        assert len(result.strict.hmors) == len(bracketed.hmors) - 1
        assert result.unit.squares["alpha"] == result.unit.squares["alpha_inv"]

    def test_idempotent(self, bracketed):
        """Test that strictifying a strict double category changes nothing up to isomorphism."""
        once = strictify(bracketed).strict

        assert are_isomorphic(strictify(once).strict, once)

    def test_bicategory(self, w):
        """Test that strictifying 𝐇^w W gives a valid 2-category."""
        assert validate_2category(strictify_bicategory(underlying_horizontal_weak(w))).valid


class TestWeakChecks:
    """Test cases for weak cofibrancy and weak double biequivalences."""

    def test_free_magma(self, bracketed, w):
        """Test that Bracket is a free magma on a, b, c and W is not."""
        report = is_free_magma(bracketed)

        assert report.free
        assert report.generators == ["a", "b", "c"]
        assert not is_free_magma(w).free

    def test_cofibrancy_verdicts(self, bracketed, w):
        """Test the sufficient test on a free input and the unknown verdict on W."""
        assert is_cofibrant_weak(bracketed).verdict == COFIBRANT_SUFFICIENT
        assert is_cofibrant_weak(w).verdict == UNKNOWN

    def test_unit_of_cofibrant_input(self, bracketed):
        """Test that the strictification unit of Bracket is a double biequivalence."""
        report = check_double_biequivalence_weak(strictify(bracketed).unit, with_reformulations=True)

        assert report.passed
        assert "weak setting" in report.notes

    def test_unit_of_w_fails_db4(self, w):
        """Test that delta and the box share an image under the unit of W."""
        report = check_double_biequivalence_weak(strictify(w).unit)

        assert not report.verdict("db4")

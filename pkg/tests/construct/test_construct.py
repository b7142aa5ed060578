"""
Tests for ℍ, 𝐇, 𝕍, 𝐕, 𝒱, 𝕃 and the internal hom.
"""

import functools

import pytest

from dblhatch.cli.corpus import corpus_entry
from dblhatch.construct.embed import (
    horizontal_embed,
    horizontal_embed_functor,
    underlying_horizontal,
    underlying_vertical,
    vertical_embed,
)
from dblhatch.construct.hom import internal_hom
from dblhatch.construct.vertical import (
    left_adjoint_l,
    lv_counit,
    vertical_morphism_2cat,
    vertical_morphism_functor,
)
from dblhatch.dblcore.double import validate_double_category
from dblhatch.dblcore.functor import (
    are_isomorphic,
    identity_double_functor,
    terminal_functor,
    validate_double_functor,
)
from dblhatch.dblcore.ops import transpose
from dblhatch.fincat.biequivalence import check_biequivalence, check_lack_fibration
from dblhatch.fincat.shapes import (
    arrow_category,
    chain_category,
    commutative_square_category,
    invertible_2cell_2category,
    isomorphism_category,
    terminal_category,
)
from dblhatch.fincat.truncation import discrete_2cat
from dblhatch.fincat.twocat import (
    TwoFunctor,
    enumerate_2functors,
    identity_2functor,
    validate_2category,
    validate_2functor,
)
from dblhatch.model.conditions import check_double_biequivalence, check_double_fibration
from dblhatch.utils.search import Budget

DOUBLE_CATEGORIES = ["One", "Empty", "OneOne", "TwoH", "TwoV", "HThree", "VThree", "Sq", "dSq", "Sq2", "CinvH", "IsoH"]


class TestEmbeddings:
    """Test cases for the horizontal and vertical embeddings and their right adjoints."""

    def test_horizontal_embed_is_valid(self, cinv):
        """Test that ℍC_inv is a valid double category with trivial vertical structure."""
        H = horizontal_embed(cinv)

        assert validate_double_category(H).valid
        assert set(H.vmors) == {"e_0", "e_1"}
        assert set(H.squares) == set(cinv.cells)

    def test_underlying_of_embedding(self, cinv):
        """Test that 𝐇ℍ is the identity up to isomorphism."""
        assert are_isomorphic(underlying_horizontal(horizontal_embed(cinv)), cinv)

    def test_vertical_embed_is_transpose(self, cinv):
        """Test that 𝕍 is ℍ followed by transposition."""
        assert are_isomorphic(vertical_embed(cinv), transpose(horizontal_embed(cinv)))

    def test_globular_squares_of_free_square(self, square):
        """Test that 𝐇𝕊 keeps exactly the squares with identity vertical sides."""
        H = underlying_horizontal(square)

        assert validate_2category(H).valid
        assert set(H.cells) == {"e_a", "e_b", "box_0", "box_1", "box_2", "box_3"}

    def test_underlying_vertical(self, two_v):
        """Test that 𝐕𝕍𝟚 has u as its only non-identity morphism."""
        assert set(underlying_vertical(two_v).morphisms) == {"u", "e_0", "e_1"}

    def test_embedded_functor(self, cinv):
        """Test that ℍ sends 2-functors to double functors."""
        assert validate_double_functor(horizontal_embed_functor(identity_2functor(cinv))).valid


class TestVerticalMorphisms:
    """Test cases for the 2-category of vertical morphisms."""

    def test_vertical_arrow(self, two_v):
        """Test that 𝒱𝕍𝟚 is the discrete 2-category on the arrow."""
        V = vertical_morphism_2cat(two_v)

        assert validate_2category(V).valid
        assert V.objects == ["e_0", "e_1", "u"]
        assert set(V.morphisms) == {"box_0", "box_1", "id_u"}
        assert set(V.cells) == set(V.cell_identities.values())

    def test_free_square(self, square):
        """Test that 𝒱𝕊 satisfies the 2-category laws."""
        V = vertical_morphism_2cat(square)

        assert validate_2category(V).valid
        assert V.morphisms["alpha"] == ("u", "v")

    def test_functor(self, square):
        """Test that 𝒱 sends the identity to a valid 2-functor."""
        assert validate_2functor(vertical_morphism_functor(identity_double_functor(square))).valid

    def test_parallel_squares_keep_their_identity_cells(self, parallel_squares):
        """Test that squares with the same boundary get distinct identity 2-cells."""
        V = vertical_morphism_2cat(parallel_squares)
        identity0, identity1 = V.cell_identities["alpha0"], V.cell_identities["alpha1"]

        assert validate_2category(V).valid
        assert identity0 != identity1
        assert V.cells[identity0] == ("alpha0", "alpha0")
        assert V.cells[identity1] == ("alpha1", "alpha1")

    def test_collapse_of_parallel_squares(self, parallel_squares, one):
        """Test that 𝒱 of 𝕊₂ -> 𝟙 is a Lack fibration, matching the double fibration."""
        F = terminal_functor(parallel_squares, one)

        assert check_double_fibration(F).passed
        assert validate_2functor(vertical_morphism_functor(F)).valid
        assert check_lack_fibration(vertical_morphism_functor(F)).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("name", DOUBLE_CATEGORIES)
    def test_vertical_morphisms_are_functors_from_vertical_arrow(self, name, two_v):
        """Test that 𝒱A is isomorphic to 𝐇[𝕍𝟚, A]."""
        A = corpus_entry(name)

        hom = underlying_horizontal(internal_hom(two_v, A))

        assert are_isomorphic(vertical_morphism_2cat(A), hom, Budget(10**6))


class TestLeftAdjoint:
    """Test cases for 𝕃 = ℍ(−) × 𝕍𝟚 and its counit."""

    def test_left_adjoint_is_valid(self, cinv):
        """Test that 𝕃C_inv is a valid double category with two copies of each object."""
        L = left_adjoint_l(cinv)

        assert validate_double_category(L).valid
        assert len(L.objects) == 2 * len(cinv.objects)

    def test_counit(self, square):
        """Test that the counit 𝕃𝒱𝕊 -> 𝕊 is a double functor."""
        counit = lv_counit(square)

        assert validate_double_functor(counit).valid
        assert counit.target is square


class TestInternalHom:
    """Test cases for [A, B]."""

    def test_hom_from_point(self, one, two_h):
        """Test that [𝟙, ℍ𝟚] is isomorphic to ℍ𝟚."""
        hom = internal_hom(one, two_h)

        assert sorted(hom.objects) == ["F0", "F1"]
        assert validate_double_category(hom).valid
        assert are_isomorphic(hom, two_h)

    def test_hom_into_point(self, square, one):
        """Test that [𝕊, 𝟙] is the point."""
        assert are_isomorphic(internal_hom(square, one), one)


@functools.cache
def small_2functors() -> list[TwoFunctor]:
    """Every 2-functor between C_inv and a few locally discrete 2-categories."""
    categories = [
        invertible_2cell_2category(),
        discrete_2cat(terminal_category()),
        discrete_2cat(arrow_category()),
        discrete_2cat(isomorphism_category()),
        discrete_2cat(chain_category()),
        discrete_2cat(commutative_square_category()),
    ]
    return [F for A in categories for B in categories for F in enumerate_2functors(A, B)]


@pytest.mark.slow
class TestHorizontalCreation:
    """Test cases for ℍ creating biequivalences and fibrations."""

    def test_population(self):
        """Test that there are enough 2-functors to compare on."""
        assert len(small_2functors()) >= 100

    def test_biequivalences(self):
        """Test that F is a biequivalence iff ℍF is a double biequivalence."""
        mismatches = [
            f"{F.source.name}->{F.target.name}:{F.name}"
            for F in small_2functors()
            if check_biequivalence(F).passed != check_double_biequivalence(horizontal_embed_functor(F)).passed
        ]

        assert mismatches == []

    def test_fibrations(self):
        """Test that F is a Lack fibration iff ℍF is a double fibration."""
        mismatches = [
            f"{F.source.name}->{F.target.name}:{F.name}"
            for F in small_2functors()
            if check_lack_fibration(F).passed != check_double_fibration(horizontal_embed_functor(F)).passed
        ]

        assert mismatches == []

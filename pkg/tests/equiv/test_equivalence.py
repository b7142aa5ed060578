"""
Tests for horizontal equivalences, adjoint promotion and weak horizontal
invertibility.
"""

import pytest

from dblhatch.cli.corpus import corpus_entry
from dblhatch.equiv.equivalence import (
    find_adjoint_equivalence,
    find_horizontal_equivalence,
    horizontal_inverse,
    is_horizontal_equivalence,
    reverse_equivalence,
    verify_adjoint,
    verify_equivalence,
)
from dblhatch.equiv.weak_inverse import (
    check_globular_invertibility,
    find_weak_horizontal_inverse,
    is_weakly_horizontally_invertible,
    unique_weak_inverse,
    verify_weak_inverse,
)


@pytest.fixture
def iso_h():
    """ℍ of the free isomorphism f: 0 -> 1, g: 1 -> 0."""
    return corpus_entry("IsoH")


class TestHorizontalEquivalence:
    """Test cases for equivalence data on horizontal morphisms."""

    def test_free_isomorphism(self, iso_h):
        """Test that f is an equivalence with inverse g and identity unit and counit."""
        w = find_horizontal_equivalence(iso_h, "f")

        assert w.backward == "g"
        assert w.unit == "1_id_0"
        assert w.counit == "1_id_1"
        assert verify_equivalence(iso_h, w)

    def test_arrow_is_not_an_equivalence(self, two_h):
        """Test that a: 0 -> 1 has no way back."""
        assert not is_horizontal_equivalence(two_h, "a")
        assert find_adjoint_equivalence(two_h, "a") is None

    def test_identity_gets_identity_data(self, two_h):
        """Test that identities are adjoint equivalences with box unit and counit."""
        w = find_adjoint_equivalence(two_h, "id_0")

        assert (w.forward, w.backward, w.unit, w.counit) == ("id_0", "id_0", "box_0", "box_0")
        assert verify_adjoint(two_h, w)

    def test_promoted_data_is_adjoint(self, iso_h):
        """Test that adjoint promotion passes the triangle verifier."""
        w = find_adjoint_equivalence(iso_h, "f")

        assert verify_adjoint(iso_h, w)
        assert w.left_triangle and w.right_triangle

    def test_reverse(self, iso_h):
        """Test that reversing equivalence data gives equivalence data on the inverse."""
        w = reverse_equivalence(iso_h, find_adjoint_equivalence(iso_h, "f"))

        assert (w.forward, w.backward) == ("g", "f")
        assert verify_equivalence(iso_h, w)

    def test_horizontal_inverse(self, iso_h, square):
        """Test two-sided horizontal inverses of squares."""
        assert horizontal_inverse(iso_h, "1_f") == "1_g"
        assert horizontal_inverse(square, "alpha") is None


class TestWeakInverse:
    """Test cases for weakly horizontally invertible squares."""

    def test_identity_cell_of_isomorphism(self, iso_h):
        """Test that 1_f is weakly invertible with weak inverse 1_g."""
        w = find_weak_horizontal_inverse(iso_h, "1_f")

        assert w.inverse == "1_g"
        assert verify_weak_inverse(iso_h, w)

    def test_unique_for_adjoint_data(self, iso_h):
        """Test that fixing adjoint data pins the weak inverse."""
        w = find_adjoint_equivalence(iso_h, "f")

        assert unique_weak_inverse(iso_h, "1_f", w, w) == "1_g"

    def test_square_over_non_equivalence(self):
        """Test that the invertible 2-cell t of ℍC_inv is not weakly invertible, f being no equivalence."""
        assert not is_weakly_horizontally_invertible(corpus_entry("CinvH"), "t")

    @pytest.mark.parametrize("name", ["One", "TwoH", "TwoV", "HThree", "Sq", "Sq2", "dSq", "CinvH", "IsoH"])
    def test_globular_invertibility_agrees(self, name):
        """Test that weak horizontal and vertical invertibility agree on globular squares."""
        report = check_globular_invertibility(corpus_entry(name))

        assert report.passed
        assert report.checked > 0

    def test_invertibility_is_searched_once_per_square(self, mocker):
        """Test that repeated queries on one double category reuse the first search."""
        A = corpus_entry("IsoH")
        search = mocker.patch(
            "dblhatch.equiv.weak_inverse.find_weak_horizontal_inverse", wraps=find_weak_horizontal_inverse
        )

        first = [is_weakly_horizontally_invertible(A, alpha) for alpha in sorted(A.squares)]
        second = [is_weakly_horizontally_invertible(A, alpha) for alpha in sorted(A.squares)]

        assert first == second
        assert search.call_count == len(A.squares)

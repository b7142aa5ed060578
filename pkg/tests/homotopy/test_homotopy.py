"""
Tests for horizontally pseudo double functors, horizontal pseudo natural
equivalences, the pseudo hom and pseudo inverses of double biequivalences.
"""

import functools

import pytest

from dblhatch.cli.corpus import corpus_entry
from dblhatch.construct.embed import horizontal_embed, underlying_horizontal
from dblhatch.construct.vertical import vertical_morphism_2cat
from dblhatch.dblcore.functor import (
    DoubleFunctor,
    are_isomorphic,
    constant_functor,
    enumerate_double_functors,
    identity_double_functor,
)
from dblhatch.dblcore.ops import coproduct
from dblhatch.dblcore.shapes import point
from dblhatch.errors import PreconditionFailed
from dblhatch.fincat.category import FinCategory
from dblhatch.fincat.free import is_disjoint_union_1_2
from dblhatch.fincat.pseudo import pseudo_hom_2cat
from dblhatch.fincat.truncation import discrete_2cat
from dblhatch.fincat.twocat import TwoCategory, validate_2category
from dblhatch.homotopy.equivalence import (
    are_right_homotopic,
    find_pseudo_equivalence,
    identity_pseudo_equivalence,
    verify_pseudo_equivalence,
)
from dblhatch.homotopy.hom import pseudo_hom, pseudo_hom_horizontal, pseudo_hom_vertical
from dblhatch.homotopy.pseudo_functor import as_pseudo, compose_pseudo, same_pseudo_functor, verify_pseudo_functor
from dblhatch.homotopy.whitehead import (
    VERTICAL_SHAPE,
    find_strict_homotopy_inverse,
    verify_whitehead_data,
    whitehead_inverse,
)
from dblhatch.model.cofibrancy import is_cofibrant
from dblhatch.model.conditions import check_double_biequivalence
from dblhatch.utils.search import Budget


@pytest.fixture
def iso_h():
    return corpus_entry("IsoH")


def as_2category(category: FinCategory) -> TwoCategory:
    return category if isinstance(category, TwoCategory) else discrete_2cat(category)


class TestPseudoFunctor:
    """Test cases for horizontally pseudo double functors."""

    def test_strict_functor_is_pseudo(self, square):
        """Test that strict functors verify with identity compositors."""
        assert verify_pseudo_functor(as_pseudo(identity_double_functor(square))).valid

    def test_composition_with_identity(self, square):
        """Test that composing with the identity changes nothing."""
        identity = identity_double_functor(square)

        assert same_pseudo_functor(compose_pseudo(identity, identity), identity)


class TestPseudoEquivalence:
    """Test cases for horizontal pseudo natural equivalences and right homotopy."""

    def test_identity_equivalence(self, square):
        """Test that the identity equivalence verifies."""
        e = identity_pseudo_equivalence(identity_double_functor(square))

        assert verify_pseudo_equivalence(e).valid

    def test_points_of_isomorphism_are_homotopic(self, one, iso_h):
        """Test that the two points of ℍ(free isomorphism) are right homotopic through f."""
        const_0 = constant_functor(one, iso_h, "0")
        const_1 = constant_functor(one, iso_h, "1")

        e = find_pseudo_equivalence(const_0, const_1)

        assert e.transformation.components == {"0": "f"}
        assert e.vmors["e_0"].inverse == "1_g"
        assert verify_pseudo_equivalence(e).valid

    def test_points_of_arrow_are_not_homotopic(self, one, two_h):
        """Test that a: 0 -> 1 does not make the ends of ℍ𝟚 homotopic."""
        assert not are_right_homotopic(constant_functor(one, two_h, "0"), constant_functor(one, two_h, "1"))


class TestPseudoHom:
    """Test cases for [A, B]_ps."""

    def test_pseudo_hom_from_point(self, one, iso_h):
        """Test that [𝟙, ℍ(free isomorphism)]_ps is isomorphic to its target."""
        assert are_isomorphic(pseudo_hom(one, iso_h), iso_h)

    def test_underlying_horizontal(self, one, two_h):
        """Test that 𝐇[𝟙, ℍ𝟚]_ps is a valid 2-category."""
        assert validate_2category(pseudo_hom_horizontal(one, two_h)).valid

    @pytest.mark.slow
    @pytest.mark.parametrize("two_category", ["OneCat", "Two", "Iso", "Cinv"])
    @pytest.mark.parametrize("double_category", ["One", "TwoH", "TwoV", "IsoH", "Sq"])
    def test_horizontal_embedding_is_left_adjoint(self, two_category, double_category):
        """Test that 𝐇[ℍB, A]_ps ≅ Ps[B, 𝐇A] and 𝒱[ℍB, A]_ps ≅ Ps[B, 𝒱A]."""
        B, A = as_2category(corpus_entry(two_category)), corpus_entry(double_category)
        HB = horizontal_embed(B)

        assert are_isomorphic(
            pseudo_hom_horizontal(HB, A), pseudo_hom_2cat(B, underlying_horizontal(A)), Budget(10**6)
        )
        assert are_isomorphic(
            pseudo_hom_vertical(HB, A), pseudo_hom_2cat(B, vertical_morphism_2cat(A)), Budget(10**6)
        )


class TestWhitehead:
    """Test cases for pseudo inverses of double biequivalences."""

    @pytest.mark.parametrize("name", ["idS", "IsoCollapse"])
    def test_inverse_verifies(self, name):
        """Test that the constructed inverse and both equivalences pass the independent verifier."""
        F = corpus_entry(name)

        data = whitehead_inverse(F)

        assert data.inverse.name == f"G_{name}"
        assert verify_whitehead_data(F, data.inverse, data.unit, data.counit)
        assert check_double_biequivalence(F).passed

    @pytest.mark.parametrize(
        "name", ["One", "Empty", "OneOne", "TwoH", "TwoV", "HThree", "Sq", "dSq", "Sq2", "CinvH", "IsoH"]
    )
    def test_identities(self, name):
        """Test that identities of builtin double categories get verified inverses."""
        F = identity_double_functor(corpus_entry(name))

        data = whitehead_inverse(F)

        assert verify_whitehead_data(F, data.inverse, data.unit, data.counit)

    def test_collapse_picks_an_object(self):
        """Test that the inverse of ℍ(free isomorphism) -> 𝟙 sends the point to an object."""
        data = whitehead_inverse(corpus_entry("IsoCollapse"))

        assert data.inverse.objects["0"] in {"0", "1"}
        assert set(data.unit.transformation.components) == {"0", "1"}

    def test_fold_fails_db3(self):
        """Test that the fold 𝟙⊔𝟙 -> 𝕍𝟚 is rejected at db3."""
        with pytest.raises(PreconditionFailed) as info:
            whitehead_inverse(corpus_entry("epsilonV2"))

        assert info.value.condition == "db3"
        assert str(info.value).startswith("PreconditionFailed: db3")

    def test_vertical_shape_precondition(self, three_v):
        """Test that a target with a vertical chain of length two is rejected."""
        with pytest.raises(PreconditionFailed) as info:
            whitehead_inverse(identity_double_functor(three_v))

        assert info.value.condition == VERTICAL_SHAPE

    def test_strict_inverse_by_search(self):
        """Test that the collapse has a strict homotopy inverse."""
        F = corpus_entry("IsoCollapse")

        data = find_strict_homotopy_inverse(F)

        assert data is not None
        assert verify_whitehead_data(F, data.inverse, data.unit, data.counit)


BIEQUIVALENCE_SHAPES = ["One", "OneOne", "TwoH", "TwoV", "IsoH", "CinvH"]


@functools.cache
def constructed_biequivalences() -> list[DoubleFunctor]:
    """Double biequivalences between small double categories, and identities
    of larger ones, whose targets have a 𝟙/𝟚 vertical category."""
    categories = [corpus_entry(name) for name in BIEQUIVALENCE_SHAPES]
    categories.append(coproduct(corpus_entry("IsoH"), point()))
    candidates = [
        F.model_copy(update={"name": f"{A.name}_{B.name}_{F.name}"})
        for A in categories
        for B in categories
        for F in enumerate_double_functors(A, B)
    ]
    candidates += [identity_double_functor(corpus_entry(name)) for name in ["Empty", "HThree", "Sq", "dSq", "Sq2"]]
    return [
        F
        for F in candidates
        if is_disjoint_union_1_2(F.target.vertical_category()) and check_double_biequivalence(F).passed
    ]


PERTURBATIONS = [
    "unit and counit exchanged",
    "inverse not normal",
    "inverse moved to the other object",
    "compositor off its frame",
    "unit components exchanged",
    "counit without square witnesses",
    "inverse with the wrong target",
    "square sent off its boundary",
    "data of a different functor",
    "fold with a constant inverse",
]


@functools.cache
def perturbed_quadruples() -> dict[str, tuple]:
    """``(F, G, η, ε)`` quadruples that are each broken in one place."""
    collapse = corpus_entry("IsoCollapse")
    data = whitehead_inverse(collapse)
    G, unit, counit = data.inverse, data.unit, data.counit
    other = "1" if G.objects["0"] == "0" else "0"
    off_frame = next(s for s in sorted(G.target.squares) if G.target.top(s) != G.target.hid(G.objects["0"]))
    components = unit.transformation.components
    swapped = unit.transformation.model_copy(update={"components": {"0": components["1"], "1": components["0"]}})

    idS = corpus_entry("idS")
    square_data = whitehead_inverse(idS)

    one_one = corpus_entry("OneOne")
    swap = next(
        F for F in enumerate_double_functors(one_one, one_one) if F.objects == {"0": "1", "1": "0"}
    )
    swap_data = whitehead_inverse(swap)

    fold = corpus_entry("epsilonV2")
    return {
        "unit and counit exchanged": (collapse, G, counit, unit),
        "inverse not normal": (collapse, G.model_copy(update={"normal": False}), unit, counit),
        "inverse moved to the other object": (
            collapse,
            G.model_copy(update={"objects": {"0": other}}),
            unit,
            counit,
        ),
        "compositor off its frame": (
            collapse,
            G.model_copy(update={"compositors": {("id_0", "id_0"): off_frame}}),
            unit,
            counit,
        ),
        "unit components exchanged": (collapse, G, unit.model_copy(update={"transformation": swapped}), counit),
        "counit without square witnesses": (collapse, G, unit, counit.model_copy(update={"vmors": {}})),
        "inverse with the wrong target": (
            collapse,
            G.model_copy(update={"target": corpus_entry("TwoH")}),
            unit,
            counit,
        ),
        "square sent off its boundary": (
            idS,
            square_data.inverse.model_copy(
                update={"squares": {**square_data.inverse.squares, "alpha": "e_a"}}
            ),
            square_data.unit,
            square_data.counit,
        ),
        "data of a different functor": (
            identity_double_functor(one_one),
            swap_data.inverse,
            swap_data.unit,
            swap_data.counit,
        ),
        "fold with a constant inverse": (
            fold,
            as_pseudo(constant_functor(fold.target, fold.source, "0")),
            identity_pseudo_equivalence(identity_double_functor(fold.source)),
            identity_pseudo_equivalence(identity_double_functor(fold.target)),
        ),
    }


@pytest.mark.slow
class TestWhiteheadSuite:
    """Test cases for pseudo inverses across many double biequivalences."""

    def test_constructed_biequivalences(self):
        """Test that every constructed double biequivalence gets a verified pseudo inverse."""
        biequivalences = constructed_biequivalences()

        unverified = []
        for F in biequivalences:
            data = whitehead_inverse(F)
            if not verify_whitehead_data(F, data.inverse, data.unit, data.counit):
                unverified.append(F.name)

        assert len(biequivalences) >= 20
        assert unverified == []

    @pytest.mark.parametrize("label", PERTURBATIONS)
    def test_perturbed_data_is_rejected(self, label):
        """Test that data broken in one place fails the independent verifier."""
        F, G, unit, counit = perturbed_quadruples()[label]

        verified = verify_whitehead_data(F, G, unit, counit)

        assert not verified

    def test_no_inverse_without_biequivalence(self):
        """Test that the fold, which fails db3, has no strict homotopy inverse either."""
        fold = corpus_entry("epsilonV2")

        assert not check_double_biequivalence(fold).passed
        assert find_strict_homotopy_inverse(fold) is None

    @pytest.mark.parametrize(
        "source,target",
        [
            ("One", "TwoH"),
            ("TwoH", "One"),
            ("OneOne", "One"),
            ("CinvH", "TwoH"),
            ("TwoH", "CinvH"),
            ("TwoV", "TwoV"),
            ("TwoH", "TwoH"),
        ],
    )
    def test_strict_inverses_between_cofibrant_objects(self, source, target):
        """Test that between cofibrant double categories a double biequivalence is exactly a
        functor with a strict homotopy inverse."""
        A, B = corpus_entry(source), corpus_entry(target)

        assert is_cofibrant(A).cofibrant and is_cofibrant(B).cofibrant
        for F in enumerate_double_functors(A, B):
            found = find_strict_homotopy_inverse(F) is not None

            assert found == check_double_biequivalence(F).passed, F.name

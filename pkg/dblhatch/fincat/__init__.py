from dblhatch.fincat.biequivalence import check_biequivalence, check_lack_fibration
from dblhatch.fincat.builder import CategoryBuilder, TwoCategoryBuilder
from dblhatch.fincat.category import (
    CatFunctor,
    FinCategory,
    compose_functors,
    enumerate_functors,
    functor_image,
    identity_functor,
    is_category_equivalence,
    is_isofibration,
    validate_category,
    validate_functor,
)
from dblhatch.fincat.free import (
    indecomposables,
    is_cofibrant_2category,
    is_disjoint_union_1_2,
    is_free_category,
)
from dblhatch.fincat.pseudo import PseudoNaturalTransformation, pseudo_hom_2cat
from dblhatch.fincat.truncation import (
    discrete_2cat,
    discrete_functor,
    pi0_functor,
    pi0_truncate,
)
from dblhatch.fincat.twocat import (
    Bicategory,
    EquivalenceWitness,
    TwoCategory,
    TwoFunctor,
    compose_2functors,
    enumerate_2functors,
    identity_2functor,
    is_equivalence_morphism,
    validate_2category,
    validate_2functor,
    validate_bicategory,
)

__all__ = [
    "check_biequivalence",
    "check_lack_fibration",
    "CategoryBuilder",
    "TwoCategoryBuilder",
    "CatFunctor",
    "FinCategory",
    "compose_functors",
    "enumerate_functors",
    "functor_image",
    "identity_functor",
    "is_category_equivalence",
    "is_isofibration",
    "validate_category",
    "validate_functor",
    "indecomposables",
    "is_cofibrant_2category",
    "is_disjoint_union_1_2",
    "is_free_category",
    "PseudoNaturalTransformation",
    "pseudo_hom_2cat",
    "discrete_2cat",
    "discrete_functor",
    "pi0_functor",
    "pi0_truncate",
    "Bicategory",
    "EquivalenceWitness",
    "TwoCategory",
    "TwoFunctor",
    "compose_2functors",
    "enumerate_2functors",
    "identity_2functor",
    "is_equivalence_morphism",
    "validate_2category",
    "validate_2functor",
    "validate_bicategory",
]

from dblhatch.homotopy.equivalence import (
    PseudoEquivalence,
    are_right_homotopic,
    build_pseudo_equivalence,
    find_pseudo_equivalence,
    identity_pseudo_equivalence,
    verify_pseudo_equivalence,
)
from dblhatch.homotopy.hom import pseudo_hom, pseudo_hom_data, pseudo_hom_horizontal, pseudo_hom_vertical
from dblhatch.homotopy.pseudo_functor import (
    HorizontallyPseudoDoubleFunctor,
    as_pseudo,
    compose_pseudo,
    same_pseudo_functor,
    verify_pseudo_functor,
)
from dblhatch.homotopy.whitehead import (
    WhiteheadData,
    find_strict_homotopy_inverse,
    verify_whitehead_data,
    whitehead_inverse,
)

__all__ = [
    "PseudoEquivalence",
    "are_right_homotopic",
    "build_pseudo_equivalence",
    "find_pseudo_equivalence",
    "identity_pseudo_equivalence",
    "verify_pseudo_equivalence",
    "pseudo_hom",
    "pseudo_hom_data",
    "pseudo_hom_horizontal",
    "pseudo_hom_vertical",
    "HorizontallyPseudoDoubleFunctor",
    "as_pseudo",
    "compose_pseudo",
    "same_pseudo_functor",
    "verify_pseudo_functor",
    "WhiteheadData",
    "find_strict_homotopy_inverse",
    "verify_whitehead_data",
    "whitehead_inverse",
]

from dblhatch.weakdbl.builder import WeakDoubleCategoryBuilder
from dblhatch.weakdbl.checks import (
    COFIBRANT_SUFFICIENT,
    UNKNOWN,
    check_double_biequivalence_weak,
    is_cofibrant_weak,
    is_free_magma,
    weak_reformulated_conditions,
)
from dblhatch.weakdbl.double import (
    WeakDoubleCategory,
    as_weak,
    check_weak_tables,
    strict_functor_as_weak,
    validate_weak,
)
from dblhatch.weakdbl.embed import (
    horizontal_embed_weak,
    underlying_horizontal_weak,
    underlying_horizontal_weak_functor,
    vertical_morphism_bicat,
    vertical_morphism_bicat_functor,
)
from dblhatch.weakdbl.shapes import bracket, self_inverse_unitor
from dblhatch.weakdbl.strictify import StrictificationResult, strictify, strictify_bicategory

__all__ = [
    "WeakDoubleCategoryBuilder",
    "COFIBRANT_SUFFICIENT",
    "UNKNOWN",
    "check_double_biequivalence_weak",
    "is_cofibrant_weak",
    "is_free_magma",
    "weak_reformulated_conditions",
    "WeakDoubleCategory",
    "as_weak",
    "check_weak_tables",
    "strict_functor_as_weak",
    "validate_weak",
    "horizontal_embed_weak",
    "underlying_horizontal_weak",
    "underlying_horizontal_weak_functor",
    "vertical_morphism_bicat",
    "vertical_morphism_bicat_functor",
    "bracket",
    "self_inverse_unitor",
    "StrictificationResult",
    "strictify",
    "strictify_bicategory",
]

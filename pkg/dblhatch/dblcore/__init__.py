from dblhatch.dblcore.builder import DoubleCategoryBuilder
from dblhatch.dblcore.double import DoubleCategory, validate_double_category
from dblhatch.dblcore.functor import (
    DoubleFunctor,
    are_isomorphic,
    compose_double_functors,
    enumerate_double_functors,
    find_double_isomorphism,
    find_structure_isomorphism,
    identity_double_functor,
    initial_functor,
    terminal_functor,
    validate_double_functor,
)
from dblhatch.dblcore.ops import coproduct, product, transpose, transpose_functor
from dblhatch.dblcore.shapes import empty_double_category, point
from dblhatch.dblcore.transformation import (
    HorizontalTransformation,
    Modification,
    VerticalTransformation,
    enumerate_horizontal,
    enumerate_modifications,
    enumerate_vertical,
    verify_modification,
    verify_transformation,
)

__all__ = [
    "DoubleCategoryBuilder",
    "DoubleCategory",
    "validate_double_category",
    "DoubleFunctor",
    "are_isomorphic",
    "compose_double_functors",
    "enumerate_double_functors",
    "find_double_isomorphism",
    "find_structure_isomorphism",
    "identity_double_functor",
    "initial_functor",
    "terminal_functor",
    "validate_double_functor",
    "coproduct",
    "product",
    "transpose",
    "transpose_functor",
    "empty_double_category",
    "point",
    "HorizontalTransformation",
    "Modification",
    "VerticalTransformation",
    "enumerate_horizontal",
    "enumerate_modifications",
    "enumerate_vertical",
    "verify_modification",
    "verify_transformation",
]

from dblhatch.construct.embed import (
    horizontal_embed,
    horizontal_embed_functor,
    underlying_horizontal,
    underlying_horizontal_category,
    underlying_horizontal_functor,
    underlying_vertical,
    underlying_vertical_category,
    underlying_vertical_functor,
    vertical_embed,
    vertical_embed_functor,
)
from dblhatch.construct.hom import internal_hom, internal_hom_data
from dblhatch.construct.vertical import (
    left_adjoint_l,
    lv_counit,
    vertical_morphism_2cat,
    vertical_morphism_functor,
)

__all__ = [
    "horizontal_embed",
    "horizontal_embed_functor",
    "underlying_horizontal",
    "underlying_horizontal_category",
    "underlying_horizontal_functor",
    "underlying_vertical",
    "underlying_vertical_category",
    "underlying_vertical_functor",
    "vertical_embed",
    "vertical_embed_functor",
    "internal_hom",
    "internal_hom_data",
    "left_adjoint_l",
    "lv_counit",
    "vertical_morphism_2cat",
    "vertical_morphism_functor",
]

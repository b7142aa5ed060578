from dblhatch.model.cofibrancy import (
    CofibrancyReport,
    cofibration_necessary_conditions,
    is_cofibrant,
)
from dblhatch.model.conditions import (
    check_double_biequivalence,
    check_double_fibration,
    check_double_trivial_fibration,
    frames,
    reformulated_conditions,
)
from dblhatch.model.generators import (
    generating_cofibrations,
    i1,
    i2,
    i3,
    i4,
    i5,
    j2,
    pinned_functor,
    vertical_arrow_fold,
)
from dblhatch.model.lifting import (
    has_rlp_generating_cofibrations,
    has_rlp_j2,
    lifting_problems,
    rlp_report,
    solve_lifting,
)

__all__ = [
    "CofibrancyReport",
    "cofibration_necessary_conditions",
    "is_cofibrant",
    "check_double_biequivalence",
    "check_double_fibration",
    "check_double_trivial_fibration",
    "frames",
    "reformulated_conditions",
    "generating_cofibrations",
    "i1",
    "i2",
    "i3",
    "i4",
    "i5",
    "j2",
    "pinned_functor",
    "vertical_arrow_fold",
    "has_rlp_generating_cofibrations",
    "has_rlp_j2",
    "lifting_problems",
    "rlp_report",
    "solve_lifting",
]

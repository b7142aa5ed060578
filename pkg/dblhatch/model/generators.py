"""
The finite generating cofibrations I1-I5, the generating trivial
cofibration J2 and the fold 𝟙⊔𝟙 -> 𝕍𝟚.
"""

from dblhatch.construct.embed import horizontal_embed
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor, enumerate_double_functors, initial_functor
from dblhatch.dblcore.shapes import (
    empty_double_category,
    free_square,
    horizontal_arrow,
    parallel_squares,
    point,
    square_boundary,
    two_points,
    vertical_arrow,
)
from dblhatch.errors import InternalInconsistency
from dblhatch.fincat.shapes import invertible_2cell_2category


def pinned_functor(
    source: DoubleCategory, target: DoubleCategory, name: str, pins: dict[str, dict[str, str]]
) -> DoubleFunctor:
    """The first double functor sending each pinned cell to its given image.

    Raises:
        InternalInconsistency: if no functor respects the pins.
    """

    def restrict(kind: str, cell: str) -> set[str] | None:
        image = pins.get(kind, {}).get(cell)
        return {image} if image is not None else None

    functor = next(enumerate_double_functors(source, target, restrict=restrict), None)
    if functor is None:
        raise InternalInconsistency(f"no double functor {source.name} -> {target.name} for {name}")
    return functor.model_copy(update={"name": name})


def _same_names(A: DoubleCategory) -> dict[str, dict[str, str]]:
    return {
        "ob": {x: x for x in A.objects},
        "h": {a: a for a in A.hmors},
        "v": {u: u for u in A.vmors},
    }


def i1() -> DoubleFunctor:
    """∅ -> 𝟙."""
    return initial_functor(empty_double_category(), point()).model_copy(update={"name": "I1"})


def i2() -> DoubleFunctor:
    """𝟙⊔𝟙 -> ℍ𝟚."""
    return pinned_functor(two_points(), horizontal_arrow(), "I2", {"ob": {"0": "0", "1": "1"}})


def i3() -> DoubleFunctor:
    """∅ -> 𝕍𝟚."""
    return initial_functor(empty_double_category(), vertical_arrow()).model_copy(update={"name": "I3"})


def i4() -> DoubleFunctor:
    """δ𝕊 -> 𝕊."""
    boundary = square_boundary()
    return pinned_functor(boundary, free_square(), "I4", _same_names(boundary))


def i5() -> DoubleFunctor:
    """𝕊₂ -> 𝕊, identifying the two parallel squares."""
    pair = parallel_squares()
    pins = _same_names(pair) | {"sq": {"alpha0": "alpha", "alpha1": "alpha"}}
    return pinned_functor(pair, free_square(), "I5", pins)


def generating_cofibrations() -> list[DoubleFunctor]:
    return [i1(), i2(), i3(), i4(), i5()]


def j2() -> DoubleFunctor:
    """ℍ𝟚 -> ℍC_inv, picking the source of the invertible 2-cell."""
    target = horizontal_embed(invertible_2cell_2category())
    return pinned_functor(
        horizontal_arrow(), target, "J2", {"ob": {"0": "0", "1": "1"}, "h": {"a": "f"}}
    )


def vertical_arrow_fold() -> DoubleFunctor:
    """𝟙⊔𝟙 -> 𝕍𝟚 onto the ends of ``u``; it misses ``u`` itself."""
    return pinned_functor(two_points(), vertical_arrow(), "eps_TwoV", {"ob": {"0": "0", "1": "1"}})

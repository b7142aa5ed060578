"""
Products, coproducts and transposition of double categories and functors.
"""

from itertools import product as pairs

from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor


def pair_id(x: str, y: str) -> str:
    return f"<{x}|{y}>"


def tagged_id(x: str, side: int) -> str:
    return f"{x}@{side}"


def _pair_cells(left: dict, right: dict) -> dict:
    return {
        pair_id(a, b): tuple(pair_id(p, q) for p, q in zip(ends_a, ends_b))
        for (a, ends_a), (b, ends_b) in pairs(sorted(left.items()), sorted(right.items()))
    }


def _pair_unary(left: dict, right: dict) -> dict:
    return {pair_id(x, y): pair_id(left[x], right[y]) for x, y in pairs(sorted(left), sorted(right))}


def _pair_binary(left: dict, right: dict) -> dict:
    return {
        (pair_id(b1, b2), pair_id(a1, a2)): pair_id(c1, c2)
        for ((b1, a1), c1), ((b2, a2), c2) in pairs(sorted(left.items()), sorted(right.items()))
    }


def product(A: DoubleCategory, B: DoubleCategory) -> DoubleCategory:
    """Componentwise product; cell ids are ``<x|y>``."""
    return DoubleCategory(
        name=f"{A.name}x{B.name}",
        objects=[pair_id(x, y) for x, y in pairs(sorted(A.objects), sorted(B.objects))],
        hmors=_pair_cells(A.hmors, B.hmors),
        vmors=_pair_cells(A.vmors, B.vmors),
        squares=_pair_cells(A.squares, B.squares),
        hidentities=_pair_unary(A.hidentities, B.hidentities),
        videntities=_pair_unary(A.videntities, B.videntities),
        hcompositions=_pair_binary(A.hcompositions, B.hcompositions),
        vcompositions=_pair_binary(A.vcompositions, B.vcompositions),
        hidentity_squares=_pair_unary(A.hidentity_squares, B.hidentity_squares),
        videntity_squares=_pair_unary(A.videntity_squares, B.videntity_squares),
        square_hcompositions=_pair_binary(A.square_hcompositions, B.square_hcompositions),
        square_vcompositions=_pair_binary(A.square_vcompositions, B.square_vcompositions),
    )


def product_projection(A: DoubleCategory, B: DoubleCategory, side: int) -> DoubleFunctor:
    """The projection ``A×B -> A`` (side 0) or ``A×B -> B`` (side 1)."""
    P = product(A, B)

    def project(left: dict, right: dict) -> dict:
        return {pair_id(x, y): (x, y)[side] for x, y in pairs(sorted(left), sorted(right))}

    return DoubleFunctor(
        name=f"pr{side}",
        source=P,
        target=(A, B)[side],
        objects=project(dict.fromkeys(A.objects), dict.fromkeys(B.objects)),
        hmors=project(A.hmors, B.hmors),
        vmors=project(A.vmors, B.vmors),
        squares=project(A.squares, B.squares),
    )


def _tag_cells(table: dict, side: int) -> dict:
    return {tagged_id(c, side): tuple(tagged_id(e, side) for e in ends) for c, ends in table.items()}


def _tag_unary(table: dict, side: int) -> dict:
    return {tagged_id(k, side): tagged_id(v, side) for k, v in table.items()}


def _tag_binary(table: dict, side: int) -> dict:
    return {(tagged_id(b, side), tagged_id(a, side)): tagged_id(c, side) for (b, a), c in table.items()}


def coproduct(A: DoubleCategory, B: DoubleCategory) -> DoubleCategory:
    """Disjoint union; cells of ``A`` are tagged ``@0``, cells of ``B`` ``@1``."""
    fields = {}
    for field, tag in (
        ("hmors", _tag_cells),
        ("vmors", _tag_cells),
        ("squares", _tag_cells),
        ("hidentities", _tag_unary),
        ("videntities", _tag_unary),
        ("hidentity_squares", _tag_unary),
        ("videntity_squares", _tag_unary),
        ("hcompositions", _tag_binary),
        ("vcompositions", _tag_binary),
        ("square_hcompositions", _tag_binary),
        ("square_vcompositions", _tag_binary),
    ):
        fields[field] = {**tag(getattr(A, field), 0), **tag(getattr(B, field), 1)}
    return DoubleCategory(
        name=f"{A.name}+{B.name}",
        objects=[tagged_id(x, 0) for x in A.objects] + [tagged_id(x, 1) for x in B.objects],
        **fields,
    )


def coproduct_injection(A: DoubleCategory, B: DoubleCategory, side: int) -> DoubleFunctor:
    source = (A, B)[side]

    def tag(cells) -> dict:
        return {c: tagged_id(c, side) for c in cells}

    return DoubleFunctor(
        name=f"in{side}",
        source=source,
        target=coproduct(A, B),
        objects=tag(source.objects),
        hmors=tag(source.hmors),
        vmors=tag(source.vmors),
        squares=tag(source.squares),
    )


def copair(first: DoubleFunctor, second: DoubleFunctor) -> DoubleFunctor:
    """The functor ``A+B -> C`` restricting to ``first`` and ``second``."""

    def merge(field: str) -> dict:
        return {
            **{tagged_id(k, 0): v for k, v in getattr(first, field).items()},
            **{tagged_id(k, 1): v for k, v in getattr(second, field).items()},
        }

    return DoubleFunctor(
        name=f"[{first.name},{second.name}]",
        source=coproduct(first.source, second.source),
        target=first.target,
        objects=merge("objects"),
        hmors=merge("hmors"),
        vmors=merge("vmors"),
        squares=merge("squares"),
    )


def _transposed_name(name: str) -> str:
    return name[:-2] if name.endswith("^T") else f"{name}^T"


def transpose(A: DoubleCategory) -> DoubleCategory:
    """Swap the horizontal and vertical structure; an involution."""
    if "transpose" not in A._cache:
        A._cache["transpose"] = DoubleCategory(
            name=_transposed_name(A.name),
            objects=list(A.objects),
            hmors=dict(A.vmors),
            vmors=dict(A.hmors),
            squares={s: (left, right, top, bottom) for s, (top, bottom, left, right) in A.squares.items()},
            hidentities=dict(A.videntities),
            videntities=dict(A.hidentities),
            hcompositions=dict(A.vcompositions),
            vcompositions=dict(A.hcompositions),
            hidentity_squares=dict(A.videntity_squares),
            videntity_squares=dict(A.hidentity_squares),
            square_hcompositions=dict(A.square_vcompositions),
            square_vcompositions=dict(A.square_hcompositions),
        )
    return A._cache["transpose"]


def transpose_functor(functor: DoubleFunctor) -> DoubleFunctor:
    return DoubleFunctor(
        name=_transposed_name(functor.name),
        source=transpose(functor.source),
        target=transpose(functor.target),
        objects=dict(functor.objects),
        hmors=dict(functor.vmors),
        vmors=dict(functor.hmors),
        squares=dict(functor.squares),
    )

"""
Test configuration and fixtures for the dblhatch test suite.
Provides the builtin shapes, the generating cofibrations, a population of
generated double functors and a clean settings cache for every test.
"""

import itertools

import pytest

from dblhatch.cli.corpus import corpus_entry
from dblhatch.config import get_settings
from dblhatch.dblcore import shapes
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor, enumerate_double_functors
from dblhatch.fincat import shapes as cat_shapes
from dblhatch.fincat.twocat import TwoCategory
from dblhatch.model import generators
from dblhatch.weakdbl.double import WeakDoubleCategory
from dblhatch.weakdbl.shapes import bracket, self_inverse_unitor


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings so environment overrides in a test take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def one() -> DoubleCategory:
    return shapes.point()


@pytest.fixture
def empty() -> DoubleCategory:
    return shapes.empty_double_category()


@pytest.fixture
def one_one() -> DoubleCategory:
    return shapes.two_points()


@pytest.fixture
def two_h() -> DoubleCategory:
    return shapes.horizontal_arrow()


@pytest.fixture
def two_v() -> DoubleCategory:
    return shapes.vertical_arrow()


@pytest.fixture
def three_h() -> DoubleCategory:
    return shapes.horizontal_chain()


@pytest.fixture
def three_v() -> DoubleCategory:
    return shapes.vertical_chain()


@pytest.fixture
def square() -> DoubleCategory:
    return shapes.free_square()


@pytest.fixture
def square_boundary() -> DoubleCategory:
    return shapes.square_boundary()


@pytest.fixture
def parallel_squares() -> DoubleCategory:
    return shapes.parallel_squares()


@pytest.fixture
def cinv() -> TwoCategory:
    return cat_shapes.invertible_2cell_2category()


@pytest.fixture
def generating_cofibrations():
    return generators.generating_cofibrations()


@pytest.fixture
def w() -> WeakDoubleCategory:
    return self_inverse_unitor()


@pytest.fixture
def bracketed() -> WeakDoubleCategory:
    return bracket()


# double categories the generated functor population runs between
POPULATION_SHAPES = ["One", "OneOne", "TwoH", "TwoV", "HThree", "Sq", "dSq", "Sq2", "IsoH", "CinvH"]
FUNCTORS_PER_PAIR = 20


@pytest.fixture(scope="session")
def functor_population() -> list[DoubleFunctor]:
    """The first FUNCTORS_PER_PAIR double functors between every ordered
    pair of POPULATION_SHAPES, renamed ``<source>_<target>_<i>``."""
    categories = [corpus_entry(name) for name in POPULATION_SHAPES]
    population = []
    for A in categories:
        for B in categories:
            for F in itertools.islice(enumerate_double_functors(A, B), FUNCTORS_PER_PAIR):
                population.append(F.model_copy(update={"name": f"{A.name}_{B.name}_{F.name}"}))
    return population

from pathlib import Path

import pytest

from matpoly.corpus import FANO, U24_F5, standard_corpus
from matpoly.matroid import RepresentableMatroid, UniformMatroid, load_matroid

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def fano():
    return RepresentableMatroid(FANO)


@pytest.fixture(scope="session")
def u24():
    return UniformMatroid(2, 4)


@pytest.fixture(scope="session")
def u24_f5():
    return RepresentableMatroid(U24_F5)


@pytest.fixture(scope="session")
def twins():
    """Equal Moebius polynomial, different d."""
    return load_matroid(DATA / "twin_triangle.txt"), load_matroid(DATA / "twin_fiveline.txt")


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus(50)

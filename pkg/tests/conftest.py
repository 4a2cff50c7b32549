import pytest

from matroid_hopf import enumerate_matroids, validate


@pytest.fixture(scope="session")
def catalogs():
    return {n: enumerate_matroids(n) for n in range(5)}


@pytest.fixture(scope="session")
def catalog_reps(catalogs):
    return [key.matroid() for n in range(5) for key in catalogs[n].classes]


@pytest.fixture(scope="session")
def loop_example():
    # three mutually parallel elements plus one loop
    return validate(4, [0b0000, 0b0001, 0b0010, 0b0100])

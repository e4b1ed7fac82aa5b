import pytest

from resgt.geometry import construct_grid, construct_symplectic, to_testing_scheme


@pytest.fixture(scope="session")
def w2():
    return construct_symplectic(2)


@pytest.fixture(scope="session")
def w3():
    return construct_symplectic(3)


@pytest.fixture(scope="session")
def w2_scheme(w2):
    return to_testing_scheme(w2.pls)


@pytest.fixture(scope="session")
def w3_scheme(w3):
    return to_testing_scheme(w3.pls)


@pytest.fixture(scope="session")
def grid3_scheme():
    return to_testing_scheme(construct_grid(3).pls)

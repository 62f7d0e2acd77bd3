import pytest

from excseq import category


@pytest.fixture(scope="session")
def a2():
    return category("A2")


@pytest.fixture(scope="session")
def a3():
    return category("A3")


@pytest.fixture(scope="session")
def d4():
    return category("D4")


# A2 modules by their roots (quiver 0 -> 1)
S1 = (1, 0)
S2 = (0, 1)
P1 = (1, 1)

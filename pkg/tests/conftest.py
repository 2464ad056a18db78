import pytest

from sepcomplex import build


@pytest.fixture(scope="session")
def ss4():
    return build(4, "ss")


@pytest.fixture(scope="session")
def ws4():
    return build(4, "ws")


@pytest.fixture(scope="session")
def ss5():
    return build(5, "ss")


@pytest.fixture(scope="session")
def ws5():
    return build(5, "ws")


@pytest.fixture(scope="session")
def ss6():
    return build(6, "ss")

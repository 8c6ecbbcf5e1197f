import pytest

from wkpdom import build_wkp


@pytest.fixture(scope="session")
def wkp32():
    return build_wkp(3, 2)


@pytest.fixture(scope="session")
def wkp23():
    return build_wkp(2, 3)


@pytest.fixture(scope="session")
def wkp52():
    return build_wkp(5, 2)

import pytest

from cyclocm.ff import field_new


@pytest.fixture(scope="session")
def f7():
    return field_new(7)


@pytest.fixture(scope="session")
def f25():
    return field_new(5, 2, (2, 4, 1))

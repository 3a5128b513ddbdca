import pytest

from dickson_mrd.gfield import make_field


@pytest.fixture(scope="session")
def f27():
    return make_field(3, 1, 3)


@pytest.fixture(scope="session")
def f8():
    return make_field(2, 1, 3, (1, 1, 0, 1))


@pytest.fixture(scope="session")
def f64():
    return make_field(2, 2, 3)


@pytest.fixture(scope="session")
def f81():
    return make_field(3, 1, 4)


@pytest.fixture(scope="session")
def f125():
    return make_field(5, 1, 3)


@pytest.fixture(scope="session")
def f256():
    return make_field(2, 2, 4)


@pytest.fixture(scope="session")
def f625():
    return make_field(5, 1, 4)

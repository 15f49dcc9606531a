import pytest

from frobw.builtins import builtin, standard_algebras


@pytest.fixture(scope="session")
def algebras():
    return standard_algebras()


@pytest.fixture(scope="session")
def field():
    return builtin("field")


@pytest.fixture(scope="session")
def zigzag2():
    return builtin("zigzag", graph="path2")


@pytest.fixture(scope="session")
def zigzag1():
    return builtin("zigzag", graph="path1")


@pytest.fixture(scope="session")
def m2():
    return builtin("matrix", n=2)


@pytest.fixture(scope="session")
def dual_numbers():
    return builtin("dual_numbers")


@pytest.fixture(scope="session")
def exterior2():
    return builtin("exterior", n=2)


@pytest.fixture(scope="session")
def zigzag3():
    return builtin("zigzag", graph="path3")

import pytest

from exactla import Field, from_rows
from hopf import builtin
from comod import from_coefficients, trivial


@pytest.fixture
def QQ():
    return Field.rational()


@pytest.fixture
def K(QQ):
    return QQ.domain


@pytest.fixture
def kz2(QQ):
    return builtin("kZ2", QQ)


@pytest.fixture
def sweedler(QQ):
    return builtin("sweedler4", QQ)


@pytest.fixture
def v_odd(kz2):
    return from_coefficients(kz2, [[{1: 1}]], "V")


@pytest.fixture
def k2(QQ):
    """k² over the trivial Hopf algebra"""
    return trivial(builtin("trivial", QQ), dim=2, name="M")


@pytest.fixture
def mat(K):
    def build(rows, cols=None):
        return from_rows(rows, K, cols)
    return build

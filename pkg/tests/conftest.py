import pytest

from sgdelta import make_semigroup


@pytest.fixture
def mcnugget():
    return make_semigroup([6, 9, 20])


@pytest.fixture
def geo():
    return make_semigroup([4, 6, 9])


@pytest.fixture
def med3():
    return make_semigroup([3, 10, 11])


@pytest.fixture
def genarith():
    return make_semigroup([5, 13, 16])


@pytest.fixture
def supersym():
    return make_semigroup([6, 10, 15])

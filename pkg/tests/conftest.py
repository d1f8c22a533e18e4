import random

import pytest

from tourney import gen_b6, gen_critical, gen_paley7, make_tournament


@pytest.fixture(scope="session")
def c3():
    return make_tournament(3, ((0, 1), (1, 2), (2, 0)))


@pytest.fixture(scope="session")
def t5():
    return gen_critical("T", 5)


@pytest.fixture(scope="session")
def u5():
    return gen_critical("U", 5)


@pytest.fixture(scope="session")
def w5t():
    return gen_critical("W", 5)


@pytest.fixture(scope="session")
def t7():
    return gen_critical("T", 7)


@pytest.fixture(scope="session")
def u7():
    return gen_critical("U", 7)


@pytest.fixture(scope="session")
def p7():
    return gen_paley7()


@pytest.fixture(scope="session")
def b6():
    return gen_b6()


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)

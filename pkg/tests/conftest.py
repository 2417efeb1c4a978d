import pytest

from koszulkit import corpus


@pytest.fixture(scope="session")
def trampoline3():
    return corpus.trampoline(3)


@pytest.fixture(scope="session")
def trampoline2():
    return corpus.trampoline(2)


@pytest.fixture(scope="session")
def pv_ideal():
    return corpus.pinched_veronese()

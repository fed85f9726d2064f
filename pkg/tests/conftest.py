import pytest

from kummergaps import catalog


@pytest.fixture(scope="session")
def gk2():
    return catalog.gk(2)


@pytest.fixture(scope="session")
def ggs25():
    return catalog.ggs(2, 5)


@pytest.fixture(scope="session")
def x1_213():
    return catalog.x1(2, 1, 3)


# Desk-scale catalog curves used by several property checks.
DESK_CURVES = [
    ("gk", dict(q=2)),
    ("gk", dict(q=3)),
    ("x1", dict(q=2, n=1, m=3)),
    ("x1", dict(q=2, n=2, m=5)),
    ("x2", dict(q=4, m=15)),
    ("x2", dict(q=5, m=24)),
    ("x2", dict(q=7, m=48)),
    ("ggs", dict(q=2, n=5)),
]


def desk_curves():
    return [catalog.build(name, **params) for name, params in DESK_CURVES]

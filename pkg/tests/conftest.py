import pytest

from zetacount.assembly import TABLE2
from zetacount.params import ContourParams, ZetaLineHypotheses
from zetacount.zeros import bundled_zeros


@pytest.fixture(scope="session")
def hyp():
    return ZetaLineHypotheses()


@pytest.fixture(scope="session")
def rows():
    return [ContourParams(c, r, eta) for (c, r, eta), _ in TABLE2]


@pytest.fixture(scope="session")
def row2(rows):
    return rows[1]


@pytest.fixture(scope="session")
def fixture_zeros():
    return bundled_zeros()

import pytest

from polycauchy2 import PolyCauchyTable, level2_by_recurrence


@pytest.fixture(scope="session")
def triangle25():
    return level2_by_recurrence(25)


@pytest.fixture(scope="session")
def table18():
    return PolyCauchyTable.build(18)

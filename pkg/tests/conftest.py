import pytest

from conexsys import fixtures


@pytest.fixture(scope="session")
def lemonade():
    return fixtures.lemonade()


@pytest.fixture(scope="session")
def pretrained():
    return fixtures.pretrained_kb()


@pytest.fixture(scope="session")
def toy():
    """Hand-traceable 3x3 matrix used in the worked consultation trace."""
    return fixtures.toy_kb()

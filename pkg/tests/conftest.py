import os
import pytest

from utils.axioms import get_fixture
from utils.instance_load import load_instance, parse_v1
from utils.path_constants import FIG1_FILENAME


def pytest_configure(config):
    os.environ.setdefault('PYTHONPATH', os.path.dirname(os.path.dirname(__file__)))


@pytest.fixture(scope="session")
def fig1():
    return load_instance(FIG1_FILENAME)


@pytest.fixture(scope="session")
def ids(fig1):
    """Voter id by name for fig1."""
    return dict(fig1.ids_by_name)


@pytest.fixture(scope="session")
def copy_ring():
    return get_fixture("copy_ring").load()


@pytest.fixture(scope="session")
def dfd_guru():
    return get_fixture("dfd_guru").load()


@pytest.fixture(scope="session")
def no_popular():
    return get_fixture("no_popular").load()


@pytest.fixture
def mutual_pair():
    """v1 and v2 rank each other first and their own casting voter second."""
    return parse_v1("v1: v2 w1\nv2: v1 w2\ncasting: w1 w2\n")


@pytest.fixture
def star():
    return parse_v1("x: c\ny: c\nz: c\ncasting: c\n")


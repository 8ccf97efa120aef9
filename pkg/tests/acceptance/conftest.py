import pytest

from utils.axioms import ORACLE_SAMPLER, random_instance
from utils.generators import make_rng

ORACLE_SEED = 2024
ORACLE_INSTANCES = 500


@pytest.fixture(scope="session")
def oracle_instances():
    """500 seeded instances with at most 10 voters and out-degree at most 3."""
    rng = make_rng(ORACLE_SEED)
    return [random_instance(rng, ORACLE_SAMPLER) for _ in range(ORACLE_INSTANCES)]

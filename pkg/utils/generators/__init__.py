"""
Seeded synthetic instance generation.
"""

from utils.generators.config import GenConfig, GeneratorMethod, Spatial
from utils.generators.rng import make_rng, rng_from, seed_int, spawn_seeds, stream_plan
from utils.generators.base_graph import read_base_graph
from utils.generators.friendship import erdos_renyi_base, gen_friendship
from utils.generators.prominence import gen_prominence
from utils.generators.weight_based import gen_weight_based
from utils.generators.participation import participation_rate
from utils.generators.generate import generate_instance

__all__ = [
    'GenConfig',
    'GeneratorMethod',
    'Spatial',
    'make_rng',
    'rng_from',
    'seed_int',
    'spawn_seeds',
    'stream_plan',
    'read_base_graph',
    'erdos_renyi_base',
    'gen_friendship',
    'gen_prominence',
    'gen_weight_based',
    'participation_rate',
    'generate_instance',
]

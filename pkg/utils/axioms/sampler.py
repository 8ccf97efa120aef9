"""
Small random instances for falsification runs and oracle cross-checks.
"""

from dataclasses import dataclass
from typing import List

import numpy as np

from utils.model import Instance


@dataclass(frozen=True)
class SamplerConfig:
    min_voters: int = 4
    max_voters: int = 12
    max_out_degree: int = 3
    min_out_degree: int = 1
    casting_fraction: float = 0.3


AXIOM_SAMPLER = SamplerConfig()
ORACLE_SAMPLER = SamplerConfig(min_voters=2, max_voters=10)


def random_instance(rng: np.random.Generator, config: SamplerConfig = AXIOM_SAMPLER) -> Instance:
    """
    Draw n uniformly, make each voter casting with the configured probability
    (at least one casting voter), then give every other voter between
    min_out_degree and max_out_degree distinct random targets (capped at
    n - 1) in random order.
    """
    n = int(rng.integers(config.min_voters, config.max_voters + 1))
    is_casting = rng.random(n) < config.casting_fraction
    if not is_casting.any():
        is_casting[int(rng.integers(n))] = True

    targets: List[List[int]] = []
    for v in range(n):
        if is_casting[v]:
            targets.append([])
            continue
        others = np.array([w for w in range(n) if w != v])
        cap = min(config.max_out_degree, len(others))
        k = int(rng.integers(min(config.min_out_degree, cap), cap + 1))
        targets.append([int(w) for w in rng.choice(others, size=k, replace=False)])

    casting = [v for v in range(n) if is_casting[v]]
    return Instance.from_targets(targets, casting)

"""
Seeded random streams.

Every generator draws from numpy's PCG64 bit generator. A run seed is turned
into a SeedSequence; batches spawn one child sequence per instance, so the
i-th instance of a batch is the same whatever the worker count.
"""

from dataclasses import dataclass
from typing import List

import numpy as np

SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed & SEED_MASK)))


def spawn_seeds(seed: int, count: int) -> List[np.random.SeedSequence]:
    """One child seed sequence per instance of a batch."""
    return np.random.SeedSequence(seed & SEED_MASK).spawn(count)


def rng_from(seed_sequence: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed_sequence))


def child_int_seed(rng: np.random.Generator) -> int:
    """A 32-bit integer seed for libraries that take plain ints (networkx)."""
    return int(rng.integers(0, 2**32 - 1))


@dataclass
class StreamPlan:
    """
    Streams of one generated instance: the base structure, the casting draw,
    and one stream per voter for its own ordering choices.
    """
    structure: np.random.Generator
    casting: np.random.Generator
    voters: List[np.random.Generator]


def stream_plan(seed: int, n: int) -> StreamPlan:
    children = np.random.SeedSequence(seed & SEED_MASK).spawn(n + 2)
    return StreamPlan(rng_from(children[0]), rng_from(children[1]),
                      [rng_from(child) for child in children[2:]])


def seed_int(seed_sequence: np.random.SeedSequence) -> int:
    """A 64-bit integer seed drawn from a spawned seed sequence."""
    return int(seed_sequence.generate_state(1, dtype=np.uint64)[0])

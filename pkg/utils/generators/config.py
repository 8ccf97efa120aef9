"""
Generator configuration.
"""

from dataclasses import dataclass
from enum import Enum

from utils.errors import InvalidConfig


class GeneratorMethod(Enum):
    FRIENDSHIP = "friendship"
    PROMINENCE = "prominence"
    PROMINENCE_FROM_BASE = "prominence-base"
    WEIGHT_BASED = "weight"


class Spatial(Enum):
    UNIFORM_2D = "uniform"
    GAUSSIAN_2D = "gaussian"


DEFAULT_N = 1000
DEFAULT_DELTA = 4.0
DEFAULT_PC = 0.2
DEFAULT_ALPHA = 2.0
DEFAULT_BETA = 1.0


@dataclass(frozen=True)
class GenConfig:
    """
    Parameters of one generated instance.

    Attributes:
        method: generation method
        n: number of voters (ignored when a base graph is supplied)
        p_c: probability that a voter casts its vote
        avg_degree: target number of delegations per voter; an integer for
                    the weight-based method (number of nearest neighbours)
        alpha: friendship exponent on (1 + common neighbours)
        beta: prominence exponent on (1 + indegree)
        spatial: point distribution of the weight-based method
        seed: root seed of all random streams
    """
    method: GeneratorMethod = GeneratorMethod.FRIENDSHIP
    n: int = DEFAULT_N
    p_c: float = DEFAULT_PC
    avg_degree: float = DEFAULT_DELTA
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    spatial: Spatial = Spatial.UNIFORM_2D
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidConfig(f"n must be positive, got {self.n}")
        if not 0.0 <= self.p_c <= 1.0:
            raise InvalidConfig(f"p_c must lie in [0, 1], got {self.p_c}")
        if self.avg_degree <= 0:
            raise InvalidConfig(f"Average degree must be positive, got {self.avg_degree}")
        if self.alpha < 0 or self.beta < 0:
            raise InvalidConfig("alpha and beta must be non-negative")
        if self.seed < 0:
            raise InvalidConfig(f"Seed must be non-negative, got {self.seed}")
        if self.method is GeneratorMethod.WEIGHT_BASED and self.avg_degree != int(self.avg_degree):
            raise InvalidConfig(f"The weight-based method needs an integer degree, got {self.avg_degree}")

    @property
    def neighbours(self) -> int:
        return int(self.avg_degree)

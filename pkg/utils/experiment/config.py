"""
Experiment configuration files.

Example (input/experiment_friendship.json):

    {
      "name": "friendship_desk",
      "generator": {"method": "friendship", "n": 200, "avg_degree": 4,
                    "p_c": 0.2, "alpha": 2},
      "rules": "all",
      "instances": 100,
      "seed": 2024,
      "truncation_caps": [0, 1, 2, 3, 4, 5]
    }

An optional "sweep" maps generator parameters (and "max_outdegree", a cap
applied before the rules run) to lists of values; the batch then runs once
per point of their cartesian product, with the same instance seeds at every
point:

    "sweep": {"p_c": [0.1, 0.2, 0.3], "max_outdegree": [1, 2, 3]}
"""

import itertools
import json
import logging
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Tuple

from utils import require_file
from utils.errors import InvalidConfig
from utils.generators import GenConfig, GeneratorMethod, Spatial
from utils.path_constants import FileKind
from utils.resolver import DelegationRule, parse_rules

logger = logging.getLogger(__name__)

TOP_LEVEL_KEYS = {"name", "generator", "rules", "instances", "seed", "truncation_caps", "base",
                  "max_outdegree", "sweep"}
GENERATOR_KEYS = {"method", "n", "avg_degree", "p_c", "alpha", "beta", "spatial"}
SWEEP_KEYS = {"n": int, "avg_degree": float, "p_c": float, "alpha": float, "beta": float,
              "max_outdegree": int}

SweepPoint = Tuple[Tuple[str, float], ...]


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Attributes:
        name: prefix of the output files
        generator: generator template; the seed is replaced per instance
        rules: rules evaluated on every instance
        instances: batch size
        seed: root seed; instance i uses the i-th spawned child
        truncation_caps: outdegree caps of the backup-delegation sweep
        base: optional base graph edge list
        max_outdegree: keep only the first d delegations of every voter
            before the rules run (None keeps all)
        sweep: (parameter, values) axes of the parameter grid
    """
    name: str
    generator: GenConfig
    rules: Tuple[DelegationRule, ...]
    instances: int
    seed: int = 0
    truncation_caps: Tuple[int, ...] = (0, 1, 2, 3, 4, 5)
    base: Optional[str] = None
    max_outdegree: Optional[int] = None
    sweep: Tuple[Tuple[str, Tuple[float, ...]], ...] = ()

    def __post_init__(self):
        if self.instances < 1:
            raise InvalidConfig(f"instances must be positive, got {self.instances}")
        if not self.rules:
            raise InvalidConfig("At least one rule is required")
        if any(d < 0 for d in self.truncation_caps):
            raise InvalidConfig("Truncation caps must be non-negative")
        if self.max_outdegree is not None and self.max_outdegree < 0:
            raise InvalidConfig(f"max_outdegree must be non-negative, got {self.max_outdegree}")
        for key, values in self.sweep:
            if key not in SWEEP_KEYS:
                raise InvalidConfig(f"Unknown sweep parameter '{key}', expected one of {sorted(SWEEP_KEYS)}")
            if not values:
                raise InvalidConfig(f"Sweep parameter '{key}' has no values")

    def generator_for(self, seed: int) -> GenConfig:
        return replace(self.generator, seed=seed)

    def grid(self) -> List[SweepPoint]:
        """Points of the parameter grid in row-major order; a single empty point without a sweep."""
        if not self.sweep:
            return [()]
        keys = [key for key, _ in self.sweep]
        return [tuple(zip(keys, values)) for values in itertools.product(*(v for _, v in self.sweep))]

    def at_point(self, point: SweepPoint) -> "ExperimentConfig":
        """
        The plain experiment run at one grid point.

        Raises:
            InvalidConfig: the point gives an invalid generator parameter
        """
        settings = dict(point)
        cap = settings.pop("max_outdegree", self.max_outdegree)
        generator = replace(self.generator, **settings) if settings else self.generator
        return replace(self, generator=generator, sweep=(),
                       max_outdegree=None if cap is None else int(cap))

    def describe_generator(self) -> str:
        g = self.generator
        text = (f"{g.method.value} (n={g.n}, avg_degree={g.avg_degree}, p_c={g.p_c}, "
                f"alpha={g.alpha}, beta={g.beta}, spatial={g.spatial.value})")
        if self.base is not None:
            text = f"{text} on base graph {self.base}"
        if self.max_outdegree is not None:
            text = f"{text}, delegations capped at {self.max_outdegree}"
        if self.sweep:
            axes = '; '.join(f"{key} in {list(values)}" for key, values in self.sweep)
            text = f"{text}, sweeping {axes}"
        return text


def _generator_from_dict(data: Dict[str, Any]) -> GenConfig:
    unknown = set(data) - GENERATOR_KEYS
    if unknown:
        raise InvalidConfig(f"Unknown generator keys: {sorted(unknown)}")
    kwargs: Dict[str, Any] = {}
    try:
        if "method" in data:
            kwargs["method"] = GeneratorMethod(data["method"])
        if "spatial" in data:
            kwargs["spatial"] = Spatial(data["spatial"])
    except ValueError as exc:
        raise InvalidConfig(str(exc)) from exc
    for key, cast in (("n", int), ("avg_degree", float), ("p_c", float), ("alpha", float), ("beta", float)):
        if key in data:
            if not isinstance(data[key], (int, float)) or isinstance(data[key], bool):
                raise InvalidConfig(f"Generator parameter '{key}' must be a number")
            kwargs[key] = cast(data[key])
    return GenConfig(**kwargs)


def _sweep_from_dict(data: Any) -> Tuple[Tuple[str, Tuple[float, ...]], ...]:
    if not isinstance(data, dict):
        raise InvalidConfig("sweep must map parameter names to lists of values")
    axes = []
    for key, values in data.items():
        if key not in SWEEP_KEYS:
            raise InvalidConfig(f"Unknown sweep parameter '{key}', expected one of {sorted(SWEEP_KEYS)}")
        if not isinstance(values, list) or not values:
            raise InvalidConfig(f"Sweep parameter '{key}' needs a non-empty list of values")
        cast = SWEEP_KEYS[key]
        for value in values:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidConfig(f"Sweep values of '{key}' must be numbers, got {value!r}")
            if cast is int and not isinstance(value, int):
                raise InvalidConfig(f"Sweep values of '{key}' must be integers, got {value!r}")
        if len(set(values)) != len(values):
            raise InvalidConfig(f"Sweep parameter '{key}' repeats a value")
        axes.append((key, tuple(cast(v) for v in values)))
    return tuple(axes)


def experiment_from_dict(data: Dict[str, Any]) -> ExperimentConfig:
    """
    Raises:
        InvalidConfig: unknown keys, wrong types or out-of-range values,
            including at any point of the sweep grid
    """
    if not isinstance(data, dict):
        raise InvalidConfig("Experiment config must be a JSON object")
    unknown = set(data) - TOP_LEVEL_KEYS
    if unknown:
        raise InvalidConfig(f"Unknown experiment keys: {sorted(unknown)}")
    rules = data.get("rules", "all")
    if isinstance(rules, list):
        rules = ';'.join(str(r) for r in rules)
    caps = data.get("truncation_caps", [0, 1, 2, 3, 4, 5])
    if not isinstance(caps, list) or not all(isinstance(d, int) for d in caps):
        raise InvalidConfig("truncation_caps must be a list of integers")
    for key in ("instances", "seed", "max_outdegree"):
        if key in data and (not isinstance(data[key], int) or isinstance(data[key], bool)):
            raise InvalidConfig(f"'{key}' must be an integer")
    config = ExperimentConfig(
        name=str(data.get("name", "experiment")),
        generator=_generator_from_dict(data.get("generator", {})),
        rules=tuple(parse_rules(str(rules))),
        instances=data.get("instances", 100),
        seed=data.get("seed", 0),
        truncation_caps=tuple(caps),
        base=data.get("base"),
        max_outdegree=data.get("max_outdegree"),
        sweep=_sweep_from_dict(data.get("sweep", {})),
    )
    for point in config.grid():
        config.at_point(point)
    return config


def load_experiment_config(filename: str) -> ExperimentConfig:
    """
    Raises:
        FileNotFoundError: the config file is not found
        InvalidConfig: the file is not valid JSON or fails validation
    """
    path = require_file(filename, FileKind.CONFIG)
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise InvalidConfig(f"{filename}: invalid JSON ({exc})") from exc
    config = experiment_from_dict(data)
    logger.info(f"Loaded experiment '{config.name}': {config.instances} instances, "
                f"{len(config.grid())} grid point(s), rules {[r.name for r in config.rules]}")
    return config

"""
Dispatch from a GenConfig to its generation method.
"""

import logging
from typing import Optional

import networkx as nx

from utils.errors import InvalidConfig
from utils.generators.config import GenConfig, GeneratorMethod
from utils.generators.friendship import gen_friendship
from utils.generators.prominence import gen_prominence
from utils.generators.weight_based import gen_weight_based
from utils.model import Instance

logger = logging.getLogger(__name__)


def generate_instance(cfg: GenConfig, base: Optional[nx.Graph] = None) -> Instance:
    """
    Raises:
        InvalidConfig: the prominence-from-base method without a base graph
    """
    if cfg.method is GeneratorMethod.FRIENDSHIP:
        return gen_friendship(cfg, base)
    if cfg.method is GeneratorMethod.PROMINENCE:
        return gen_prominence(cfg, base)
    if cfg.method is GeneratorMethod.PROMINENCE_FROM_BASE:
        if base is None:
            raise InvalidConfig("The prominence-base method needs a base graph (--base)")
        return gen_prominence(cfg, base)
    return gen_weight_based(cfg, base)

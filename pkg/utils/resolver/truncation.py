"""
Outdegree truncation for the backup-delegation analysis.
"""

import logging
from fractions import Fraction

from utils.model import Instance, isolated_voters

logger = logging.getLogger(__name__)


def truncate_outdegree(instance: Instance, d: int) -> Instance:
    """
    Drop every edge of rank greater than d. With d = 0 nobody delegates.
    """
    truncated = instance.truncated(d)
    logger.debug(f"Outdegree cap {d}: {instance.edge_count} -> {truncated.edge_count} edges")
    return truncated


def isolated_fraction(instance: Instance) -> Fraction:
    """Share of all voters that are isolated."""
    if instance.n == 0:
        return Fraction(0)
    return Fraction(len(isolated_voters(instance)), instance.n)

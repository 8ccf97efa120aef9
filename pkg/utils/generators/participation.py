"""
Participation rate of a generated instance: the share of voters whose
vote reaches a casting voter.
"""

from fractions import Fraction

from utils.model import Instance
from utils.resolver import isolated_fraction


def participation_rate(instance: Instance) -> Fraction:
    """1 - |I| / |V|, exactly."""
    return 1 - isolated_fraction(instance)

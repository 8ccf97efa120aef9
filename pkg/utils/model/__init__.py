"""
Core model: instances, voter classes, paths and rank sequences.
"""

from utils.model.instance import Instance, RankedEdge, VoterId
from utils.model.classification import (
    VoterClass,
    classify,
    delegating_voters,
    isolated_voters,
    reduce,
    voters_of_class,
)
from utils.model.paths import DEFAULT_PATH_CAP, Path, RankSequence, paths_from, sequence_of

__all__ = [
    'Instance',
    'RankedEdge',
    'VoterId',
    'VoterClass',
    'classify',
    'delegating_voters',
    'isolated_voters',
    'reduce',
    'voters_of_class',
    'DEFAULT_PATH_CAP',
    'Path',
    'RankSequence',
    'paths_from',
    'sequence_of',
]

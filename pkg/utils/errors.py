"""
Exception types raised by the delegation library.

Library code raises; only the command script maps these to exit codes.
"""


class DelegationError(Exception):
    """Base class for all library errors."""


class InstanceFormatError(DelegationError, ValueError):
    """An instance file could not be parsed."""


class InvalidInstance(DelegationError, ValueError):
    """An instance violates a structural invariant."""


class PathBudgetExceeded(DelegationError, RuntimeError):
    """Exhaustive enumeration went past its configured cap."""


class NotConfluentOrder(DelegationError, ValueError):
    """The settle engine was asked to run an order it cannot resolve."""


class NonConfluentMetrics(DelegationError, ValueError):
    """Branching metrics were requested for a non-confluent resolution."""


class Infeasible(DelegationError, RuntimeError):
    """No C-branching satisfies the requested constraints."""


class NonUniqueMax(DelegationError, RuntimeError):
    """Two distinct sequences tie for the maximum of a voter's sequence set."""


class PreconditionUnmet(DelegationError, ValueError):
    """An axiom check was called on a voter it does not apply to."""


class MismatchedInstance(DelegationError, ValueError):
    """Two branchings do not belong to the same instance."""


class InsufficientNeighbors(DelegationError, ValueError):
    """Fewer candidate neighbours than the requested out-degree."""


class InvalidConfig(DelegationError, ValueError):
    """A generator or experiment configuration is out of range."""

"""
Axiom identifiers, violation witnesses and the per-run report.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from utils.instance_output import format_v1
from utils.model import Instance, VoterId


class AxiomKind(Enum):
    GURU = "guru"
    GURU_STAR = "guru-star"
    COPY = "copy"
    IIC = "iic"


@dataclass(frozen=True)
class Violation:
    """
    A witness: the instance, the voter whose action exposes the violation
    (None for axioms that act on the whole instance) and a readable account
    of the weights or paths before and after.
    """
    instance: Instance
    voter: Optional[VoterId]
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instance": format_v1(self.instance),
            "voter": None if self.voter is None else self.instance.name(self.voter),
            "detail": self.detail,
        }


@dataclass
class AxiomReport:
    axiom: str
    rule: str
    trials: int = 0
    seed: Optional[int] = None
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        if (self.axiom, self.rule) != (other.axiom, other.rule):
            raise ValueError("Only reports of the same axiom and rule can be merged")
        return AxiomReport(self.axiom, self.rule, self.trials + other.trials, self.seed,
                           self.violations + other.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "rule": self.rule,
            "trials": self.trials,
            "seed": self.seed,
            "violations": [v.to_dict() for v in self.violations],
        }

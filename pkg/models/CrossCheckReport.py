from enum import Enum

from pydantic import BaseModel

from models.LimitEstimate import LimitClass


class HeuristicStatus(str, Enum):
    consistent = "consistent"
    inconclusive = "inconclusive"
    contradiction = "contradiction"


class CrossCheckReport(BaseModel):
    minimal_is_zero: bool
    monoid_has_zero: bool
    limit: LimitClass
    quasi_zero: bool
    monoid_order: int
    zero_witness: str | None = None
    n_max: int
    window: int
    structural_agreement: bool
    heuristic_status: HeuristicStatus
    heuristic: bool = True

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class LimitClass(str, Enum):
    converges_to_zero = "converges_to_zero"
    converges_to_one = "converges_to_one"
    converges_to_other = "converges_to_other"
    no_convergence_detected = "no_convergence_detected"


@dataclass(frozen=True)
class TailStatistics:
    first_n: int
    last_n: int
    minimum: Fraction
    maximum: Fraction

    @property
    def width(self) -> Fraction:
        return self.maximum - self.minimum


@dataclass(frozen=True)
class LimitEstimate:
    """
    Heuristic reading of the tail of a probability series, never a proof of the limit.
    value_range is set only for converges_to_other.
    """

    classification: LimitClass
    window: int
    epsilon: Fraction
    evidence: TailStatistics
    value_range: tuple[Fraction, Fraction] | None = None
    heuristic: bool = True

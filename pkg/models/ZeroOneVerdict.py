from enum import Enum

from pydantic import BaseModel, model_validator


class Decision(str, Enum):
    one = "one"
    zero = "zero"
    not_zero_one = "not_zero_one"


class Route(str, Enum):
    quasi_zero_direct = "quasi_zero_direct"
    minimize_then_zero = "minimize_then_zero"


class ZeroOneVerdict(BaseModel):
    decision: Decision
    sink_components: list[list[int]]
    all_sinks_final: bool
    all_sinks_nonfinal: bool
    route: Route = Route.quasi_zero_direct
    sync_word: str | None = None

    @model_validator(mode="after")
    def check_certificate(self):
        expected = (
            Decision.one
            if self.all_sinks_final
            else Decision.zero
            if self.all_sinks_nonfinal
            else Decision.not_zero_one
        )
        if self.decision != expected:
            raise ValueError(f"Decision {self.decision.value} contradicts the sink finality certificate.")
        return self

    @property
    def is_zero_one(self) -> bool:
        return self.decision != Decision.not_zero_one

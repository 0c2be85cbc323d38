from pydantic import BaseModel

from models.ZeroOneVerdict import ZeroOneVerdict


class ComponentReport(BaseModel):
    id: int
    states: list[str]
    is_sink: bool
    is_trivial: bool
    # "final", "nonfinal" or "mixed"
    finality: str


class SinkReport(BaseModel):
    component: int
    access_word: str
    # gamma_n(Past(P)) >= |A|^(n - lower_bound_shift) for n >= lower_bound_shift
    lower_bound_shift: int


class AnalysisReport(BaseModel):
    state_count: int
    alphabet: str
    trimmed_states: int = 0
    components: list[ComponentReport]
    sinks: list[SinkReport]
    is_quasi_zero: bool
    is_zero_automaton: bool
    minimal_state_count: int
    verdict: ZeroOneVerdict

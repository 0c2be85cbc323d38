from dataclasses import dataclass

from helper.exceptions import AutomatonError
from models.Alphabet import Alphabet

# a word is a sequence of symbol ids of the owning alphabet; () is the empty word
Word = tuple[int, ...]


@dataclass(frozen=True)
class Dfa:
    """
    Deterministic automaton over dense state ids 0..state_count-1.

    transitions[q][a] is the target of state q on symbol id a. A cell holding None marks a
    missing transition; such a machine is partial and only accepted by `complete`.
    `accessible` is None while unknown, see helper.automaton_core.is_accessible.
    """

    alphabet: Alphabet
    transitions: tuple[tuple[int | None, ...], ...]
    initial: int
    finals: frozenset[int]
    state_names: tuple[str, ...] | None = None
    accessible: bool | None = None

    def __post_init__(self):
        n = len(self.transitions)
        if n == 0:
            raise AutomatonError("An automaton needs at least one state.")
        if not 0 <= self.initial < n:
            raise AutomatonError(f"Initial state {self.initial} out of range 0..{n - 1}.")
        for q in self.finals:
            if not 0 <= q < n:
                raise AutomatonError(f"Final state {q} out of range 0..{n - 1}.")
        width = len(self.alphabet)
        for q, row in enumerate(self.transitions):
            if len(row) != width:
                raise AutomatonError(f"State {q} has {len(row)} transitions, alphabet has {width} symbols.")
            for target in row:
                if target is not None and not 0 <= target < n:
                    raise AutomatonError(f"Transition target {target} of state {q} out of range.")
        if self.state_names is not None and len(self.state_names) != n:
            raise AutomatonError("state_names must name every state.")

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def is_complete(self) -> bool:
        return all(target is not None for row in self.transitions for target in row)

    def name_of(self, q: int) -> str:
        if self.state_names is not None:
            return self.state_names[q]
        return f"q{q}"

# encoding: utf-8
import logging
import random

from helper.automaton_core import trim_accessible
from helper.graph_analysis import scc_decompose, sink_components
from models.Alphabet import Alphabet
from models.Dfa import Dfa, Word

_logger = logging.getLogger(__name__)


def random_dfa(rng: random.Random, n: int, alphabet: Alphabet, final_ratio: float = 0.5) -> Dfa:
    """
    Uniformly random complete machine on n states, not necessarily accessible.
    """
    rows = tuple(tuple(rng.randrange(n) for _ in alphabet) for _ in range(n))
    finals = frozenset(q for q in range(n) if rng.random() < final_ratio)
    return Dfa(alphabet, rows, rng.randrange(n), finals)


def random_accessible_dfa(rng: random.Random, max_states: int, alphabet: Alphabet) -> Dfa:
    return trim_accessible(random_dfa(rng, rng.randint(1, max_states), alphabet))


def random_zero_automaton(rng: random.Random, n: int, alphabet: Alphabet) -> Dfa:
    """
    Random accessible machine with a unique, absorbing sink and no other sink component.
    A random (n-1)-state machine gets an extra absorbing state, and one random edge of every
    other sink component is redirected to it until no other sink component is left.
    """
    if n < 2:
        return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}) if rng.random() < 0.5 else frozenset())

    base = random_dfa(rng, n - 1, alphabet)
    sink = n - 1
    rows = [list(row) for row in base.transitions] + [[sink] * len(alphabet)]
    finals = set(base.finals)
    if rng.random() < 0.5:
        finals.add(sink)

    while True:
        d = Dfa(alphabet, tuple(tuple(row) for row in rows), base.initial, frozenset(finals))
        others = [members for members in sink_components(scc_decompose(d)) if sink not in members]
        if not others:
            return trim_accessible(d)
        for members in others:
            rows[rng.choice(sorted(members))][rng.randrange(len(alphabet))] = sink


def random_word(rng: random.Random, alphabet: Alphabet, max_length: int) -> Word:
    return tuple(rng.randrange(len(alphabet)) for _ in range(rng.randint(0, max_length)))

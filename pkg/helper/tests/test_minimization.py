import pytest

from models.Dfa import Dfa
from models.StatePartition import StatePartition
from ..automaton_core import equivalent, is_isomorphic, parse_dfa
from ..exceptions import NotAccessibleError, NotCongruenceError
from ..minimization import (
    check_minimality_condition_M,
    hopcroft_minimize,
    hopcroft_partition,
    nerode_partition_naive,
    quotient_automaton,
)
from ..random_automata import random_accessible_dfa

REDUNDANT_STARTS_WITH_A = """
alphabet: a b
states: start accept1 accept2 reject
initial: start
finals: accept1 accept2
start a accept1
start b reject
accept1 a accept2
accept1 b accept1
accept2 a accept1
accept2 b accept2
reject a reject
reject b reject
"""


def test_minimal_machine_is_fixed_point(starts_with_a, even_length, contains_ab):
    for d in (starts_with_a, even_length, contains_ab):
        assert is_isomorphic(hopcroft_minimize(d), d)


def test_redundant_state_is_merged(starts_with_a):
    d = parse_dfa(REDUNDANT_STARTS_WITH_A)
    minimal = hopcroft_minimize(d)
    assert minimal.state_count == 3
    assert minimal.state_names == ("start", "accept1", "reject")
    assert is_isomorphic(minimal, starts_with_a)
    assert not check_minimality_condition_M(d)


def test_hopcroft_matches_naive_refinement(rng, ab):
    for _ in range(200):
        d = random_accessible_dfa(rng, 10, ab)
        minimal = hopcroft_minimize(d)
        assert is_isomorphic(minimal, quotient_automaton(d, nerode_partition_naive(d)))
        assert hopcroft_partition(d) == nerode_partition_naive(d)
        assert check_minimality_condition_M(minimal)
        assert minimal.state_count <= d.state_count
        assert equivalent(minimal, d)


def test_naive_partition_examples(all_words, even_length, ab):
    everything_final = Dfa(ab, ((1, 2), (2, 0), (0, 1)), 0, frozenset({0, 1, 2}))
    assert nerode_partition_naive(everything_final).class_count == 1
    assert nerode_partition_naive(even_length).class_count == 2
    assert nerode_partition_naive(all_words).is_identity


def test_naive_partition_is_saturated_congruence(rng, ab):
    for _ in range(50):
        d = random_accessible_dfa(rng, 8, ab)
        p = nerode_partition_naive(d)
        for members in p.classes:
            assert len({q in d.finals for q in members}) == 1
            for a in range(len(ab)):
                assert len({p.class_of[d.transitions[q][a]] for q in members}) == 1


def test_class_ids_follow_smallest_state():
    p = StatePartition.from_labels(["x", "y", "x", "z", "y"])
    assert p.class_of == (0, 1, 0, 2, 1)
    assert p.classes == (frozenset({0, 2}), frozenset({1, 4}), frozenset({3}))


def test_quotient_by_identity(sink_zero):
    assert is_isomorphic(quotient_automaton(sink_zero, StatePartition.identity(6)), sink_zero)


def test_quotient_rejects_non_congruence(even_length, sink_zero):
    with pytest.raises(NotCongruenceError, match="mixes final"):
        quotient_automaton(even_length, StatePartition((0, 0)))
    # q0 and q1 are both non-final but q0·a = q1 and q1·a = q2 land in different classes
    with pytest.raises(NotCongruenceError, match="not closed"):
        quotient_automaton(sink_zero, StatePartition((0, 0, 1, 2, 3, 4)))
    with pytest.raises(NotCongruenceError):
        quotient_automaton(even_length, StatePartition((0,)))


def test_minimality_condition(all_words):
    assert check_minimality_condition_M(all_words)


def test_minimization_requires_accessible(ab):
    d = Dfa(ab, ((0, 0), (0, 1)), 0, frozenset({1}))
    with pytest.raises(NotAccessibleError):
        hopcroft_minimize(d)
    with pytest.raises(NotAccessibleError):
        check_minimality_condition_M(d)

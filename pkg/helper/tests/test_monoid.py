import pytest

from models.Alphabet import Alphabet
from models.Dfa import Dfa
from models.TransitionMonoid import BYTES_STATE_LIMIT, then
from ..automaton_core import accepts
from ..exceptions import AlphabetError, LimitExceededError
from ..minimization import hopcroft_minimize
from ..monoid import compose, evaluate, find_zero, minimum_rank_zero, syntactic_monoid, transition_monoid
from ..random_automata import random_accessible_dfa, random_dfa, random_word, random_zero_automaton
from ..regex_compiler import compile_regex
from ..zero_one import is_quasi_zero, is_zero_automaton

TEST_CAP = 50_000


def test_single_state(all_words):
    m = transition_monoid(all_words)
    assert m.order == 1
    assert find_zero(m) == (0, ())


def test_even_length(even_length):
    m = transition_monoid(even_length)
    assert m.order == 2
    assert m.elements == (bytes([0, 1]), bytes([1, 0]))
    assert find_zero(m) is None
    assert syntactic_monoid(even_length).order == 2


def test_syntactic_monoid_of_minimal_machine(starts_with_a):
    assert syntactic_monoid(starts_with_a).order == transition_monoid(hopcroft_minimize(starts_with_a)).order


def test_contains_ab_has_constant_zero():
    d = compile_regex(".*ab.*", "ab")
    m = syntactic_monoid(d)
    i, witness = find_zero(m)
    zero = m.elements[i]
    assert len(set(zero)) == 1
    assert witness == (0, 1)


def test_zero_of_zero_automaton_is_constant_map_to_sink(sink_zero):
    m = transition_monoid(sink_zero)
    i, witness = find_zero(m)
    assert m.elements[i] == bytes([5] * 6)
    assert evaluate(m, witness) == m.elements[i]


def test_witnesses(rng, ab):
    for _ in range(20):
        d = random_dfa(rng, 4, ab)
        m = transition_monoid(d)
        assert m.witness(m.identity_index) == ()
        lengths = [len(m.witness(i)) for i in range(m.order)]
        assert lengths == sorted(lengths)
        for i, e in enumerate(m.elements):
            assert evaluate(m, m.witness(i)) == e


def test_closed_under_composition(rng, ab):
    for _ in range(20):
        m = transition_monoid(random_dfa(rng, 4, ab))
        for i in range(m.order):
            for j in range(m.order):
                assert 0 <= compose(m, i, j) < m.order


def test_evaluate_is_a_morphism(rng, ab):
    for _ in range(20):
        m = transition_monoid(random_dfa(rng, 5, ab))
        assert evaluate(m, ()) == bytes(range(5))
        u, v = random_word(rng, ab, 6), random_word(rng, ab, 6)
        assert evaluate(m, u + v) == then(evaluate(m, u), evaluate(m, v))


def test_evaluate_rejects_foreign_symbol(even_length):
    with pytest.raises(AlphabetError):
        evaluate(transition_monoid(even_length), (5,))


def test_element_cap(sink_zero):
    with pytest.raises(LimitExceededError) as e:
        transition_monoid(sink_zero, cap=2)
    assert e.value.limit == 2
    assert e.value.progress == 2


def test_zero_absorbs_everything_and_is_unique(rng, ab):
    for _ in range(30):
        d = random_zero_automaton(rng, rng.randint(2, 6), ab)
        m = syntactic_monoid(d, TEST_CAP)
        i, witness = find_zero(m)
        for _ in range(100):
            j = rng.randrange(m.order)
            assert compose(m, i, j) == i
            assert compose(m, j, i) == i
        generators = [m.generator(a) for a in range(len(ab))]
        absorbing = [
            k
            for k, e in enumerate(m.elements)
            if all(then(e, g) == e == then(g, e) for g in generators)
        ]
        assert absorbing == [i]


def test_zero_witness_absorbs_as_factor(rng, ab):
    for _ in range(30):
        d = random_zero_automaton(rng, rng.randint(2, 6), ab)
        _, w0 = find_zero(syntactic_monoid(d, TEST_CAP))
        for _ in range(20):
            x, y = random_word(rng, ab, 6), random_word(rng, ab, 6)
            assert accepts(d, x + w0 + y) == accepts(d, w0)


def test_minimum_rank_agrees_with_closure(rng, ab):
    for _ in range(100):
        d = random_dfa(rng, rng.randint(1, 5), ab)
        zero = find_zero(transition_monoid(d, TEST_CAP))
        shortcut = minimum_rank_zero(d)
        assert (zero is None) == (shortcut is None)
        if zero is not None:
            assert shortcut[0] == transition_monoid(d, TEST_CAP).elements[zero[0]]


def _monoid_has_zero(d):
    try:
        return find_zero(syntactic_monoid(d, TEST_CAP)) is not None
    except LimitExceededError:
        return minimum_rank_zero(hopcroft_minimize(d)) is not None


def test_three_routes_agree(rng, ab):
    for _ in range(500):
        d = random_accessible_dfa(rng, 8, ab)
        minimal_is_zero = is_zero_automaton(hopcroft_minimize(d))
        assert minimal_is_zero == _monoid_has_zero(d) == is_quasi_zero(d)


def _unary(targets):
    return Dfa(Alphabet.of("a"), tuple((t,) for t in targets), 0, frozenset({0}))


def test_cycle_beyond_byte_states():
    n = BYTES_STATE_LIMIT + 44
    d = _unary((q + 1) % n for q in range(n))
    m = transition_monoid(d)
    assert m.order == n
    assert m.elements[1] == tuple((q + 1) % n for q in range(n))
    assert find_zero(m) is None
    assert minimum_rank_zero(d) is None


def test_chain_beyond_byte_states():
    last = BYTES_STATE_LIMIT + 44
    d = _unary(min(q + 1, last) for q in range(last + 1))
    m = transition_monoid(d)
    assert m.order == last + 1
    i, witness = find_zero(m)
    assert m.elements[i] == (last,) * (last + 1)
    assert witness == (0,) * last
    assert evaluate(m, witness) == m.elements[i]
    assert compose(m, 1, i) == compose(m, i, 1) == i
    assert minimum_rank_zero(d)[0] == (last,) * (last + 1)


def test_byte_transformations_up_to_limit():
    n = BYTES_STATE_LIMIT
    m = transition_monoid(_unary((q + 1) % n for q in range(n)))
    assert m.elements[0] == bytes(range(n))
    assert m.order == n

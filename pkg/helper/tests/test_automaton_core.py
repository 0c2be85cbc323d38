import pytest

from models.Alphabet import Alphabet
from models.Dfa import Dfa
from ..automaton_core import (
    accepts,
    complement,
    complete,
    concatenate,
    equivalent,
    format_dfa,
    format_dot,
    is_accessible,
    is_empty,
    is_isomorphic,
    left_quotient,
    length_automaton,
    parse_dfa,
    parse_word,
    product,
    right_quotient,
    run,
    trim_accessible,
    universal_automaton,
    empty_automaton,
    word_automaton,
)
from ..exceptions import AlphabetError, DfaSyntaxError, IncompleteAutomatonError, NotAccessibleError
from ..oracle import words_up_to
from ..probability import counting_series
from ..random_automata import random_accessible_dfa, random_dfa, random_word

HEADER = "alphabet: a b\nstates: p q\ninitial: p\nfinals: q\n"


def test_parse_completes_partial_table(starts_with_a):
    assert starts_with_a.state_count == 3
    assert starts_with_a.state_names == ("start", "accept", "dead")
    assert starts_with_a.is_complete
    assert accepts(starts_with_a, parse_word(starts_with_a.alphabet, "abb"))
    assert not accepts(starts_with_a, parse_word(starts_with_a.alphabet, "ba"))
    assert not accepts(starts_with_a, ())


def test_parse_even_length(even_length):
    assert even_length.state_count == 2
    assert accepts(even_length, ())
    assert not accepts(even_length, (0,))
    assert [e.gamma for e in counting_series(even_length, 5)] == [1, 0, 4, 0, 16, 0]


def test_parse_rejects_incomplete_table():
    with pytest.raises(DfaSyntaxError, match="incomplete"):
        parse_dfa(HEADER + "p a q\np b p\nq a q\n")


@pytest.mark.parametrize(
    "text, line, message",
    [
        (HEADER + "p a r\n", 5, "Unknown state"),
        (HEADER + "p c q\n", 5, "Unknown symbol"),
        (HEADER + "p a q\np a p\n", 6, "Duplicate transition"),
        (HEADER + "p a\n", 5, "Expected"),
        ("alphabet:\nstates: p\ninitial: p\n", 1, "empty"),
        ("alphabet: ab\nstates: p\ninitial: p\n", 1, "single printable character"),
        ("alphabet: a\nstates: p p\ninitial: p\n", 2, "Duplicate state"),
        ("@strict\n" + HEADER, 1, "Unknown directive"),
        ("colour: red\n" + HEADER, 1, "Unknown section"),
    ],
)
def test_parse_errors_carry_line(text, line, message):
    with pytest.raises(DfaSyntaxError, match=message) as e:
        parse_dfa(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}:")


def test_parse_missing_section():
    with pytest.raises(DfaSyntaxError, match="initial"):
        parse_dfa("alphabet: a\nstates: p\n")


def test_parse_ignores_comments_and_blank_lines():
    d = parse_dfa("# header\n\nalphabet: a   # one letter\nstates: p\ninitial: p\nfinals: p\np a p # loop\n")
    assert d.state_count == 1
    assert d.finals == frozenset({0})


def test_format_single_state(all_words):
    text = format_dfa(all_words)
    assert "finals: q0\n" in text
    assert text == "alphabet: a b\nstates: q0\ninitial: q0\nfinals: q0\nq0 a q0\nq0 b q0\n"


def test_format_round_trip(even_length, starts_with_a, no_words):
    for d in (even_length, starts_with_a, no_words):
        assert is_isomorphic(parse_dfa(format_dfa(d)), d)


def test_format_round_trip_random(rng, ab):
    for _ in range(50):
        d = trim_accessible(random_dfa(rng, 6, ab))
        assert is_isomorphic(parse_dfa(format_dfa(d)), d)


def test_format_partial_machine_round_trips_through_completion():
    d = Dfa(Alphabet.of("a"), ((None,),), 0, frozenset({0}))
    text = format_dfa(d)
    assert text.startswith("@partial\n")
    assert parse_dfa(text).state_count == 2


def test_complete_is_identity_on_complete(even_length):
    assert complete(even_length) is even_length


def test_complete_epsilon_machine():
    d = Dfa(Alphabet.of("a"), ((None,),), 0, frozenset({0}))
    c = complete(d)
    assert c.state_count == 2
    assert accepts(c, ())
    assert not accepts(c, (0,))
    assert not accepts(c, (0, 0))
    with pytest.raises(IncompleteAutomatonError):
        accepts(d, (0,))


def test_complete_preserves_language(rng, ab):
    for _ in range(20):
        rows = tuple(tuple(None if rng.random() < 0.3 else rng.randrange(4) for _ in ab) for _ in range(4))
        partial = Dfa(ab, rows, 0, frozenset({1, 2}))
        completed = complete(partial)
        assert completed.state_count <= partial.state_count + 1
        for w in words_up_to(ab, 8):
            try:
                expected = accepts(partial, w)
            except IncompleteAutomatonError:
                expected = False
            assert accepts(completed, w) == expected


def test_complete_dead_state_name_is_fresh():
    d = parse_dfa("@partial\nalphabet: a\nstates: dead live\ninitial: live\nfinals: live\nlive a dead\n")
    assert d.state_names == ("dead", "live", "dead1")


def test_trim_removes_unreachable(ab):
    d = Dfa(ab, ((0, 1), (1, 0), (3, 2), (2, 3)), 0, frozenset({1, 3}))
    trimmed = trim_accessible(d)
    assert trimmed.state_count == 2
    assert trimmed.accessible
    assert is_isomorphic(trim_accessible(trimmed), trimmed)
    assert not is_accessible(d)


def test_trim_preserves_language(rng, ab):
    for _ in range(30):
        d = random_dfa(rng, 6, ab)
        assert equivalent(d, trim_accessible(d))


def test_accepts_examples(even_length, starts_with_a):
    assert accepts(even_length, ())
    assert not accepts(even_length, parse_word(even_length.alphabet, "a"))
    assert not accepts(starts_with_a, parse_word(starts_with_a.alphabet, "ba"))


def test_accepts_rejects_foreign_symbol(even_length):
    with pytest.raises(AlphabetError):
        accepts(even_length, (2,))
    with pytest.raises(AlphabetError):
        parse_word(even_length.alphabet, "abc")


def test_complement(all_words, rng, ab):
    assert is_isomorphic(complement(complement(all_words)), all_words)
    assert all(e.mu == 0 for e in counting_series(complement(all_words), 10))
    for _ in range(20):
        d = random_accessible_dfa(rng, 6, ab)
        for e, f in zip(counting_series(d, 12), counting_series(complement(d), 12)):
            assert e.mu + f.mu == 1


def test_product_identities(starts_with_a, ab):
    assert equivalent(product(starts_with_a, empty_automaton(ab), "union"), starts_with_a)
    assert is_empty(product(starts_with_a, complement(starts_with_a), "intersection"))


@pytest.mark.parametrize(
    "mode, rule",
    [
        ("union", lambda x, y: x or y),
        ("intersection", lambda x, y: x and y),
        ("difference", lambda x, y: x and not y),
        ("symmetric_difference", lambda x, y: x != y),
    ],
)
def test_product_boolean_laws(rng, ab, mode, rule):
    for _ in range(5):
        d1, d2 = random_dfa(rng, 5, ab), random_dfa(rng, 5, ab)
        p = product(d1, d2, mode)
        assert p.is_complete and is_accessible(p)
        for w in words_up_to(ab, 8):
            assert accepts(p, w) == rule(accepts(d1, w), accepts(d2, w))


def test_product_alphabet_mismatch(even_length):
    with pytest.raises(AlphabetError):
        product(even_length, universal_automaton(Alphabet.of("ac")))


def test_left_quotient(starts_with_a, all_words, ab):
    assert equivalent(left_quotient(starts_with_a, ()), starts_with_a)
    assert equivalent(left_quotient(starts_with_a, (0,)), all_words)


def test_quotient_laws(rng, ab):
    for _ in range(10):
        d = random_accessible_dfa(rng, 8, ab)
        u = random_word(rng, ab, 5)
        left, right = left_quotient(d, u), right_quotient(d, u)
        assert left.accessible
        for v in words_up_to(ab, 5):
            assert accepts(left, v) == accepts(d, u + v)
            assert accepts(right, v) == accepts(d, v + u)


def test_right_quotient_of_even_length(even_length):
    assert right_quotient(even_length, ()).finals == even_length.finals
    odd = right_quotient(even_length, (0,))
    assert [e.mu for e in counting_series(odd, 5)] == [0, 1, 0, 1, 0, 1]


def test_is_isomorphic_relabeling(ab):
    d = Dfa(ab, ((1, 2), (2, 1), (2, 2)), 0, frozenset({1}), accessible=True)
    swapped = Dfa(ab, ((2, 1), (1, 1), (1, 2)), 0, frozenset({2}), accessible=True)
    assert is_isomorphic(d, d)
    assert is_isomorphic(d, swapped)


def test_is_isomorphic_distinguishes(starts_with_a, even_length):
    assert not is_isomorphic(starts_with_a, even_length)


def test_is_isomorphic_requires_accessible(ab, even_length):
    d = Dfa(ab, ((0, 0), (1, 1)), 0, frozenset({0}))
    with pytest.raises(NotAccessibleError):
        is_isomorphic(d, even_length)


def test_run_extended_transition(sink_zero):
    w = parse_word(sink_zero.alphabet, "aab")
    assert run(sink_zero, 0, w) == 5
    assert run(sink_zero, 0, ()) == 0


def test_concatenate(rng, ab):
    for _ in range(5):
        d1, d2 = random_dfa(rng, 3, ab), random_dfa(rng, 3, ab)
        c = concatenate(d1, d2)
        for w in words_up_to(ab, 6):
            expected = any(accepts(d1, w[:i]) and accepts(d2, w[i:]) for i in range(len(w) + 1))
            assert accepts(c, w) == expected


def test_word_and_length_automata(ab):
    w = parse_word(ab, "ab")
    single = word_automaton(ab, w)
    exactly_two = length_automaton(ab, 2)
    for v in words_up_to(ab, 4):
        assert accepts(single, v) == (v == w)
        assert accepts(exactly_two, v) == (len(v) == 2)
    assert is_empty(empty_automaton(ab))
    assert not is_empty(universal_automaton(ab))


def test_format_dot(starts_with_a):
    dot = format_dot(starts_with_a)
    assert dot.startswith("digraph dfa {")
    assert '1 [label="accept", shape=doublecircle];' in dot
    assert '1 -> 1 [label="a,b"];' in dot
    assert "start -> 0;" in dot

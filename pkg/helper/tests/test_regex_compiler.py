import re
from fractions import Fraction

import pytest

from constants import REGEX_MAX_NESTING
from models.Alphabet import Alphabet
from ..automaton_core import accepts, equivalent, is_accessible, parse_word
from ..exceptions import AlphabetError, RegexSyntaxError
from ..oracle import brute_force_count, words_up_to
from ..probability import counting_series
from ..regex_compiler import _Nfa, compile_regex


def test_starts_with_a(starts_with_a):
    d = compile_regex("a.*", "ab")
    assert d.is_complete and is_accessible(d)
    assert equivalent(d, starts_with_a)
    series = counting_series(d, 20)
    assert series.mu(0) == 0
    assert all(series.mu(n) == Fraction(1, 2) for n in range(1, 21))


def test_even_length(even_length):
    d = compile_regex("(..)*", "ab")
    assert equivalent(d, even_length)
    assert [e.mu for e in counting_series(d, 7)] == [1, 0, 1, 0, 1, 0, 1, 0]


def test_contains_ab_matches_enumeration(contains_ab):
    d = compile_regex(".*ab.*", "ab")
    assert equivalent(d, contains_ab)
    assert brute_force_count(d, 12).mismatches == ()


@pytest.mark.parametrize(
    "pattern, member",
    [
        ("", lambda w: w == ""),
        ("a|", lambda w: w in ("", "a")),
        ("ab|ba", lambda w: w in ("ab", "ba")),
        ("(a|b)*b", lambda w: w.endswith("b")),
        ("a**", lambda w: set(w) <= {"a"}),
        ("(ab)*", lambda w: w == "ab" * (len(w) // 2)),
        ("a(b|())a", lambda w: w in ("aba", "aa")),
    ],
)
def test_language(pattern, member):
    alphabet = Alphabet.of("ab")
    d = compile_regex(pattern, alphabet)
    for w in words_up_to(alphabet, 6):
        text = "".join(alphabet.symbols[a] for a in w)
        assert accepts(d, w) == member(text), text


def test_escaped_metacharacter():
    d = compile_regex("a\\.", "a.")
    assert accepts(d, parse_word(d.alphabet, "a."))
    assert not accepts(d, parse_word(d.alphabet, "aa"))


@pytest.mark.parametrize(
    "pattern, position",
    [
        ("(a", 0),
        ("a)", 1),
        ("*a", 0),
        ("a|*", 2),
        ("ab\\", 2),
    ],
)
def test_syntax_errors(pattern, position):
    with pytest.raises(RegexSyntaxError) as e:
        compile_regex(pattern, "ab")
    assert e.value.position == position


def test_unknown_symbol():
    with pytest.raises(AlphabetError, match="'c'"):
        compile_regex("ac", "ab")


def test_compiled_machines_are_cached():
    assert compile_regex("a*b", "ab") is compile_regex("a*b", Alphabet.of("ab"))


def test_closure_accepts_any_iterable():
    nfa = _Nfa()
    a, b, c = nfa.new_state(), nfa.new_state(), nfa.new_state()
    nfa.epsilon[a].append(b)
    nfa.epsilon[b].append(c)
    assert nfa.closure(q for q in [a]) == frozenset({a, b, c})
    assert nfa.closure(iter([b])) == frozenset({b, c})


@pytest.mark.parametrize("pattern", ["a.*", ".*a", "(a|b)*ab", "a*b*"])
def test_language_beyond_first_step(pattern):
    alphabet = Alphabet.of("ab")
    d = compile_regex(pattern, alphabet)
    accepted = {"".join(alphabet.symbols[a] for a in w) for w in words_up_to(alphabet, 5) if accepts(d, w)}
    assert accepted == {
        "".join(alphabet.symbols[a] for a in w)
        for w in words_up_to(alphabet, 5)
        if re.fullmatch(pattern, "".join(alphabet.symbols[a] for a in w))
    }


def test_nesting_limit():
    depth = REGEX_MAX_NESTING
    d = compile_regex("(" * depth + "a" + ")" * depth, "ab")
    assert accepts(d, (0,))
    with pytest.raises(RegexSyntaxError) as e:
        compile_regex("(" * 300 + "a" + ")" * 300, "ab")
    assert e.value.position == depth

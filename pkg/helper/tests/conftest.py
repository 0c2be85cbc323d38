import random

import pytest

from models.Alphabet import Alphabet
from ..example_automata import load_example


@pytest.fixture
def ab():
    return Alphabet.of("ab")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def all_words():
    return load_example("all_words")


@pytest.fixture
def no_words():
    return load_example("no_words")


@pytest.fixture
def starts_with_a():
    return load_example("starts_with_a")


@pytest.fixture
def even_length():
    return load_example("even_length")


@pytest.fixture
def contains_ab():
    return load_example("contains_ab")


@pytest.fixture
def sink_zero():
    return load_example("sink_zero")


@pytest.fixture
def two_sinks():
    return load_example("two_sinks")

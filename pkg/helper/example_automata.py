# encoding: utf-8
from pathlib import Path

from helper.automaton_core import parse_dfa
from models.Dfa import Dfa

AUTOMATA_DIR = Path(__file__).resolve().parent.parent / "automata"

EXAMPLES = (
    "all_words",
    "no_words",
    "starts_with_a",
    "even_length",
    "contains_ab",
    "sink_zero",
    "two_sinks",
)


def example_path(name: str) -> Path:
    if name not in EXAMPLES:
        raise KeyError(f"Unknown example {name!r}, expected one of {', '.join(EXAMPLES)}.")
    return AUTOMATA_DIR / f"{name}.dfa"


def load_example(name: str) -> Dfa:
    return parse_dfa(example_path(name).read_text(encoding="utf-8"))

# encoding: utf-8
"""
Smoke benchmark of the linear-time zero-one decision on random sparse machines.
Times the bare decision and the full `cli.py is-zero-one` path (parse, trim, decide).
Not part of the test suite; the timings are only logged.
"""
import argparse
import contextlib
import io
import logging
import random
import tempfile
import time
from pathlib import Path

from cli import run
from constants import DEBUG
from helper.automaton_core import format_dfa, trim_accessible
from helper.random_automata import random_dfa
from helper.zero_one import classify_zero_one
from models.Alphabet import Alphabet

_logger = logging.getLogger(__name__)


def measure(n: int, rng: random.Random, alphabet: Alphabet, workdir: Path) -> tuple[int, float, float]:
    d = trim_accessible(random_dfa(rng, n, alphabet))
    start = time.perf_counter()
    classify_zero_one(d)
    decision = time.perf_counter() - start

    path = workdir / f"random_{n}.dfa"
    path.write_text(format_dfa(d), encoding="utf-8")
    start = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        run(["is-zero-one", str(path)])
    command = time.perf_counter() - start
    return d.state_count, decision, command


def main():
    parser = argparse.ArgumentParser(description="Time the zero-one decision from 10^3 to 10^6 states.")
    parser.add_argument("--max-exponent", type=int, default=6)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    logging.basicConfig(
        format="%(asctime)s::%(levelname)s::%(name)s::%(message)s",
        level=logging.DEBUG if DEBUG else logging.INFO,
    )

    rng = random.Random(args.seed)
    alphabet = Alphabet.of("ab")
    with tempfile.TemporaryDirectory() as workdir:
        for exponent in range(3, args.max_exponent + 1):
            states, decision, command = measure(10**exponent, rng, alphabet, Path(workdir))
            _logger.info(
                "%8d states: decision %.3f s (%.2f us per state), is-zero-one %.3f s (%.2f us per state)",
                states,
                decision,
                decision / states * 1e6,
                command,
                command / states * 1e6,
            )


if __name__ == "__main__":
    main()

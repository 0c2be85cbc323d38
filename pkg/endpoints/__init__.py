# encoding: utf-8
import logging
from functools import wraps

from fastapi import HTTPException
from pydantic import BaseModel, Field, model_validator
from starlette.responses import Response

from constants import MAX_INPUT_SIZE
from helper.exceptions import AutomatonError, LimitExceededError
from helper.reports import load_automaton, prepare

_logger = logging.getLogger(__name__)


class AutomatonInput(BaseModel):
    dfa: str | None = Field(
        default=None,
        max_length=MAX_INPUT_SIZE,
        examples=["alphabet: a b\nstates: q0\ninitial: q0\nfinals: q0\nq0 a q0\nq0 b q0\n"],
    )
    regex: str | None = Field(default=None, max_length=MAX_INPUT_SIZE, examples=[".*ab.*"])
    alphabet: str | None = Field(default=None, max_length=256, examples=["ab"])

    @model_validator(mode="after")
    def check_single_source(self):
        if (self.dfa is None) == (self.regex is None):
            raise ValueError("Give exactly one of 'dfa' or 'regex'.")
        if self.regex is not None and not self.alphabet:
            raise ValueError("'regex' needs an 'alphabet'.")
        return self

    def load(self, response: Response | None = None):
        """
        Parsed or compiled machine, trimmed to its accessible part, and the number of removed states.
        The count also goes to the X-Trimmed-States header of `response`.
        """
        d, trimmed = prepare(load_automaton(dfa_text=self.dfa, regex=self.regex, alphabet=self.alphabet))
        if response is not None:
            response.headers["X-Trimmed-States"] = str(trimmed)
        return d, trimmed


def automaton_errors(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LimitExceededError as e:
            raise HTTPException(status_code=413, detail=str(e))
        except AutomatonError as e:
            _logger.debug("Rejected input: %s", e)
            raise HTTPException(status_code=400, detail=str(e))

    return wrapper

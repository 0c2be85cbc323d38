# encoding: utf-8
from pydantic import BaseModel
from starlette.responses import Response

from endpoints import AutomatonInput, automaton_errors
from helper.automaton_core import format_word
from helper.zero_one import synchronizing_word
from server import app


class SyncWordResponse(BaseModel):
    word: str = "aabb"
    target: str = "q5"
    verified: bool = True


@app.post("/automata/sync-word", response_model=SyncWordResponse | None, tags=["Automata"])
@automaton_errors
def get_sync_word(body: AutomatonInput, response: Response):
    """
    Word sending every state to the sink of a zero automaton; null for any other automaton.
    """
    d, _ = body.load(response)
    certificate = synchronizing_word(d)
    if certificate is None:
        return None
    return SyncWordResponse(
        word=format_word(d.alphabet, certificate.word),
        target=d.name_of(certificate.target),
        verified=certificate.per_state_check,
    )

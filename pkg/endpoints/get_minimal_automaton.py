# encoding: utf-8
from pydantic import BaseModel
from starlette.responses import Response

from endpoints import AutomatonInput, automaton_errors
from helper.automaton_core import format_dfa
from helper.minimization import hopcroft_minimize
from server import app


class MinimalAutomatonResponse(BaseModel):
    state_count: int = 3
    dfa: str = "alphabet: a b\nstates: q0 q1 q2\n..."
    trimmed_states: int = 0


@app.post("/automata/minimize", response_model=MinimalAutomatonResponse, tags=["Automata"])
@automaton_errors
def minimize_automaton(body: AutomatonInput, response: Response):
    d, trimmed = body.load(response)
    minimal = hopcroft_minimize(d)
    return MinimalAutomatonResponse(state_count=minimal.state_count, dfa=format_dfa(minimal), trimmed_states=trimmed)

# encoding: utf-8
from starlette.responses import Response

from endpoints import AutomatonInput, automaton_errors
from helper.oracle import cross_check
from models.CrossCheckReport import CrossCheckReport
from server import app


@app.post("/automata/check", response_model=CrossCheckReport, tags=["Automata"])
@automaton_errors
def get_cross_check(body: AutomatonInput, response: Response):
    d, _ = body.load(response)
    return cross_check(d)

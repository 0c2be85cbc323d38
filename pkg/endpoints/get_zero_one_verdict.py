# encoding: utf-8
from starlette.responses import Response

from endpoints import AutomatonInput, automaton_errors
from helper.reports import decide
from models.ZeroOneVerdict import ZeroOneVerdict
from server import app


@app.post("/automata/zero-one", response_model=ZeroOneVerdict, tags=["Automata"])
@automaton_errors
def get_zero_one_verdict(
    body: AutomatonInput,
    response: Response,
    viaMinimization: bool = False,
    certificate: bool = False,
):
    """
    Linear-time zero-one decision. With viaMinimization the minimal automaton route runs
    as well and both must agree. With certificate a zero-one verdict carries the
    synchronizing word of the minimal automaton.
    """
    d, _ = body.load(response)
    return decide(d, via_minimization=viaMinimization, certificate=certificate)

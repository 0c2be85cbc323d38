# encoding: utf-8
from fastapi import Query
from starlette.responses import Response

from constants import MONOID_ELEMENT_CAP
from endpoints import AutomatonInput, automaton_errors
from helper.reports import monoid_report
from models.MonoidReport import MonoidReport
from server import app


@app.post(
    "/automata/monoid",
    response_model=MonoidReport,
    response_model_exclude_none=True,
    tags=["Automata"],
)
@automaton_errors
def get_monoid(
    body: AutomatonInput,
    response: Response,
    monoidCap: int = Query(default=MONOID_ELEMENT_CAP, ge=1, le=MONOID_ELEMENT_CAP),
    dump: bool = False,
):
    d, _ = body.load(response)
    return monoid_report(d, monoidCap, dump)

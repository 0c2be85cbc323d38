# encoding: utf-8
from typing import List

from fastapi import Query
from starlette.responses import Response

from endpoints import AutomatonInput, automaton_errors
from helper.probability import counting_series, default_n_max
from helper.reports import series_rows
from models.SeriesRow import SeriesRow
from server import app


@app.post("/automata/series", response_model=List[SeriesRow], tags=["Automata"])
@automaton_errors
def get_series(body: AutomatonInput, response: Response, nMax: int | None = Query(default=None, ge=0, le=4096)):
    """
    Exact number of accepted words of each length and its probability as numerator/denominator.
    """
    d, _ = body.load(response)
    return series_rows(counting_series(d, default_n_max(d) if nMax is None else nMax))

# encoding: utf-8
from starlette.responses import Response

from endpoints import AutomatonInput, automaton_errors
from helper.reports import analysis_report
from models.AnalysisReport import AnalysisReport
from server import app


@app.post("/automata/analyze", response_model=AnalysisReport, tags=["Automata"])
@automaton_errors
def analyze_automaton(body: AutomatonInput, response: Response):
    """
    Strongly connected components, sink components with their access words, and the zero-one verdict.
    """
    d, trimmed = body.load(response)
    return analysis_report(d, trimmed)

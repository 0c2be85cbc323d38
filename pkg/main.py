# encoding: utf-8
import logging

from starlette.responses import RedirectResponse

from constants import DEBUG
from endpoints.get_analysis import analyze_automaton
from endpoints.get_cross_check import get_cross_check
from endpoints.get_minimal_automaton import minimize_automaton
from endpoints.get_monoid import get_monoid
from endpoints.get_series import get_series
from endpoints.get_sync_word import get_sync_word
from endpoints.get_zero_one_verdict import get_zero_one_verdict
from server import app

_logger = logging.getLogger(__name__)

_logger.debug(
    "Loaded: %s",
    ", ".join(
        f.__name__
        for f in (
            analyze_automaton,
            minimize_automaton,
            get_zero_one_verdict,
            get_sync_word,
            get_monoid,
            get_series,
            get_cross_check,
        )
    ),
)


@app.get("/", include_in_schema=False)
async def docs_redirect():
    return RedirectResponse(url="/docs")


logging.basicConfig(
    format="%(asctime)s::%(levelname)s::%(name)s::%(message)s",
    level=logging.DEBUG if DEBUG else logging.INFO,
    handlers=[logging.StreamHandler()],
)

if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app)

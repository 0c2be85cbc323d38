# encoding: utf-8
import logging
import os

import fastapi.logger
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.middleware.gzip import GZipMiddleware
from pydantic import BaseModel
from starlette.requests import Request
from starlette.responses import JSONResponse

fastapi.logger.logger.setLevel(logging.WARNING)

_logger = logging.getLogger(__name__)

app = FastAPI(
    title="Zero-one law REST-API server",
    description="Decides whether regular languages obey the zero-one law and reports the certificates.",
    version=os.getenv("VERSION") or "tbd",
    license_info={"name": "MIT LICENSE"},
)

app.add_middleware(GZipMiddleware, minimum_size=500)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
    expose_headers=["X-Trimmed-States"],
)


class PingResponse(BaseModel):
    status: str = "ok"


@app.get("/ping", include_in_schema=False, response_model=PingResponse)
async def ping_server():
    """
    Ping Pong
    """
    return PingResponse()


@app.exception_handler(Exception)
async def unicorn_exception_handler(request: Request, exc: Exception):
    _logger.exception("Unhandled error on %s", request.url.path)
    return JSONResponse(
        status_code=500,
        content={"message": "Internal server error"},
    )

"""FastAPI application exposing the library as JSON endpoints.

The CLI reuses the handler functions directly; the HTTP layer adds routing
and the DomainError -> 400 translation.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from ..errors import DomainError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(title="afflink", description=__doc__)

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return JSONResponse(
            status_code=400, content={"error": exc.name, "message": str(exc)}
        )

    @app.post("/info")
    def info(req: schemas.TypeRequest):
        return handlers.info(req)

    @app.post("/pair")
    def pair(req: schemas.PairRequest):
        return handlers.pair(req)

    @app.post("/reflect")
    def reflect(req: schemas.ReflectRequest):
        return handlers.reflect(req)

    @app.post("/dot")
    def dot(req: schemas.ReflectRequest):
        return handlers.dot(req)

    @app.post("/leq")
    def leq(req: schemas.LeqRequest):
        return handlers.leq(req)

    @app.post("/box")
    def box(req: schemas.BoxRequest):
        return handlers.box(req)

    @app.post("/hasse")
    def hasse(req: schemas.BoxRequest, format: str = "json"):
        if format == "dot":
            return PlainTextResponse(handlers.hasse_dot(req))
        return handlers.hasse(req)

    @app.post("/integrality")
    def integrality(req: schemas.IntegralityRequest):
        return handlers.integrality(req)

    @app.post("/kk-pred")
    def kk_pred(req: schemas.KKRequest):
        return handlers.kk_predecessors(req)

    @app.post("/class")
    def linkage_class(req: schemas.ClassRequest, format: str = "json"):
        if format == "dot":
            return PlainTextResponse(handlers.linkage_class_dot(req))
        return handlers.linkage_class(req)

    @app.post("/alpha-down")
    def alpha_down(req: schemas.AlphaDownRequest):
        return handlers.alpha_down(req)

    @app.post("/partition")
    def partition(req: schemas.PartitionRequest):
        return handlers.partition(req)

    @app.post("/verma-char")
    def verma_char(req: schemas.CharacterRequest):
        return handlers.verma_character(req)

    @app.post("/weyl-kac")
    def weyl_kac(req: schemas.CharacterRequest):
        return handlers.weyl_kac_character(req)

    @app.post("/q-mult")
    def q_mult(req: schemas.CharacterRequest):
        return handlers.q_multiplicities(req)

    @app.post("/proj-mult")
    def proj_mult(req: schemas.ProjRequest):
        return handlers.projective_multiplicities(req)

    @app.post("/decomp")
    def decomp(req: schemas.DecompRequest):
        return handlers.decomposition_matrix(req)

    return app


app = create_app()

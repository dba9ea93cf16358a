"""HTTP/JSON service exposing every operation, plus SVG rendering.

Bodies use the same structured formats as the CLI's --json output.  Domain
and validation errors come back as {"error": {"code", "message"}} with
status 400 (404 for unknown jobs).  The two open-ended operations,
/search/equivalence and /graph/explore, accept {"async": true} and return a
job handle to poll at GET /search/jobs/<id>; everything else is
synchronous.  The service is stateless apart from the in-memory job table
(optionally mirrored to --state-dir as one JSON file per finished job).
"""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse


class CanonicalJSONResponse(JSONResponse):
    """Sorted keys, compact separators: identical payloads give identical
    bytes, matching the CLI's --json output."""

    def render(self, content) -> bytes:
        return json.dumps(content, sort_keys=True,
                          separators=(",", ":")).encode("utf-8")

from . import platgraph as pg
from .braids import (BraidWord, apply_relation, cancel_sites, exponent_sum,
                     free_reduce, relation_sites)
from .corpus import load_corpus, verify_corpus
from .errors import ParseError, PlatkitError
from .invariants import certificate
from .plats import (Plat, apply_move, component_count, destabilize_syntactic,
                    flip, hilden_generators, plat_closure, pocket_move, stabilize)
from .render import RenderSpec, render_svg
from .search import (DistinctCertificates, Exhausted, Found, SearchBudget,
                     default_budget, equivalence_search)


class JobNotFoundError(KeyError):
    pass


class JobTable:
    """Insert/lookup/complete are atomic; results are plain JSON dicts."""

    def __init__(self, state_dir: str | None = None):
        self._jobs: dict[str, dict] = {}
        self._lock = threading.Lock()
        self._state_dir = Path(state_dir) if state_dir else None
        if self._state_dir:
            self._state_dir.mkdir(parents=True, exist_ok=True)

    def create(self, kind: str) -> str:
        job_id = uuid.uuid4().hex
        with self._lock:
            self._jobs[job_id] = {"id": job_id, "kind": kind, "state": "running"}
        return job_id

    def complete(self, job_id: str, state: str, result: dict | None = None,
                 error: str | None = None):
        with self._lock:
            job = self._jobs[job_id]
            job["state"] = state
            if result is not None:
                job["result"] = result
            if error is not None:
                job["error"] = error
        if self._state_dir:
            with open(self._state_dir / f"{job_id}.json", "w", encoding="utf-8") as fh:
                json.dump(self.get(job_id), fh, sort_keys=True)

    def get(self, job_id: str) -> dict:
        with self._lock:
            if job_id not in self._jobs:
                raise JobNotFoundError(job_id)
            return dict(self._jobs[job_id])


def _plat_from(data: Any) -> Plat:
    if not isinstance(data, dict):
        raise ParseError("expected a plat object {strands, word}")
    return plat_closure(BraidWord.from_json_dict(data))


def _budget_from(data: Any) -> SearchBudget:
    if not data:
        return default_budget()
    if not isinstance(data, dict):
        raise ParseError("budget must be an object")
    return SearchBudget.from_json_dict(data)


def _search_result_payload(result) -> tuple[str, dict]:
    if isinstance(result, Found):
        return "found", {"result": "found",
                         "moves": len(result.trace.moves),
                         "trace": result.trace.to_json_dict()}
    if isinstance(result, DistinctCertificates):
        return "distinct", {"result": "distinct", "reason": result.reason}
    if isinstance(result, Exhausted):
        return "exhausted", {"result": "exhausted",
                             "nodes_expanded": result.nodes_expanded,
                             "reason": result.reason}
    raise TypeError(f"unexpected search result {result!r}")


def create_app(state_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="platkit", version="0.1.0",
                  default_response_class=CanonicalJSONResponse)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"])
    jobs = JobTable(state_dir)
    app.state.jobs = jobs

    @app.exception_handler(PlatkitError)
    async def domain_error(request: Request, exc: PlatkitError):
        return CanonicalJSONResponse(status_code=400, content={
            "error": {"code": exc.code, "message": str(exc)}})

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return CanonicalJSONResponse(status_code=400, content={
            "error": {"code": "malformed", "message": str(exc.errors())}})

    @app.exception_handler(JobNotFoundError)
    async def missing_job(request: Request, exc: JobNotFoundError):
        return CanonicalJSONResponse(status_code=404, content={
            "error": {"code": "not-found", "message": str(exc)}})

    @app.exception_handler(KeyError)
    async def missing_field(request: Request, exc: KeyError):
        return CanonicalJSONResponse(status_code=400, content={
            "error": {"code": "malformed", "message": f"missing field {exc}"}})

    @app.post("/plat/validate")
    async def plat_validate(body: dict):
        p = _plat_from(body.get("plat", body))
        return {
            "ok": True,
            "strands": p.strands,
            "bridges": p.bridges,
            "components": component_count(p),
            "writhe": exponent_sum(p.word),
            "word_length": len(p.word.letters),
            "reduced_word": list(free_reduce(p.word).letters),
        }

    @app.post("/plat/invariants")
    async def plat_invariants(body: dict):
        p = _plat_from(body.get("plat", body))
        return certificate(p).to_json_dict()

    @app.post("/plat/move")
    async def plat_move(body: dict):
        p = _plat_from(body["plat"])
        gen = body.get("gen")
        if gen is None:
            raise ParseError("missing field 'gen'")
        if isinstance(gen, list):
            gen = [(step["gen"], bool(step.get("inverse", False)))
                   if isinstance(step, dict) else step for step in gen]
        moved = apply_move(p, body.get("side", "bottom"), gen,
                           inverse=bool(body.get("inverse", False)))
        return moved.to_json_dict()

    @app.post("/plat/stabilize")
    async def plat_stabilize(body: dict):
        p = _plat_from(body["plat"])
        return stabilize(p, sign=int(body.get("sign", 1))).to_json_dict()

    @app.post("/plat/destabilize")
    async def plat_destabilize(body: dict):
        p = _plat_from(body["plat"])
        out = destabilize_syntactic(p)
        return {"found": out is not None,
                "plat": out.to_json_dict() if out else None}

    @app.post("/plat/flip")
    async def plat_flip(body: dict):
        p = _plat_from(body["plat"])
        return flip(p).to_json_dict()

    @app.post("/plat/pocket")
    async def plat_pocket(body: dict):
        p = _plat_from(body["plat"])
        path = [(step["direction"], step["layer"]) for step in body.get("path", [])]
        out, trace = pocket_move(p, body.get("side", "bottom"),
                                 int(body["bridge"]), path)
        return {"plat": out.to_json_dict(),
                "trace": [{"gen": g, "inverse": inv, "side": side}
                          for g, inv, side in trace]}

    @app.post("/plat/rewrite-sites")
    async def plat_rewrite_sites(body: dict):
        p = _plat_from(body.get("plat", body))
        letters = p.word.letters
        return {
            "sites": [{"kind": kind, "pos": pos}
                      for kind, pos in relation_sites(letters)],
            "cancel": cancel_sites(letters),
        }

    @app.post("/plat/rewrite")
    async def plat_rewrite(body: dict):
        p = _plat_from(body["plat"])
        kind = body.get("kind")
        letters = p.word.letters
        if kind in ("commute", "triangle"):
            try:
                letters = apply_relation(letters, kind, int(body["pos"]))
            except ValueError as exc:
                raise ParseError(str(exc))
        elif kind == "cancel":
            pos = int(body["pos"])
            if pos not in cancel_sites(letters):
                raise ParseError(f"no cancelling pair at position {pos}")
            letters = letters[:pos] + letters[pos + 2:]
        elif kind == "reduce":
            letters = free_reduce(p.word).letters
        else:
            raise ParseError(f"unknown rewrite kind {kind!r}")
        return plat_closure(BraidWord(p.strands, letters)).to_json_dict()

    @app.post("/plat/render")
    async def plat_render(body: dict):
        p = _plat_from(body.get("plat", body))
        spec = RenderSpec.from_json_dict(body.get("spec", {}))
        try:
            svg = render_svg(p, spec)
        except ValueError as exc:
            raise ParseError(str(exc))
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/hilden/generators")
    async def hilden_gens(n: int):
        catalog = hilden_generators(n)
        return {"n": n, "generators": [
            {"name": g.name, "word": g.word.to_json_dict()}
            for g in catalog]}

    @app.get("/corpus")
    async def corpus_list():
        return {"entries": [
            {"name": e.name, "note": e.note, "plat": e.plat.to_json_dict()}
            for e in load_corpus()]}

    @app.get("/corpus/verify")
    async def corpus_check():
        results = verify_corpus()
        return {"ok": all(r.ok for r in results),
                "checks": [r.to_json_dict() for r in results]}

    @app.post("/search/equivalence")
    async def search_equivalence(body: dict):
        p1 = _plat_from(body["plat1"])
        p2 = _plat_from(body["plat2"])
        budget = _budget_from(body.get("budget"))
        if body.get("async"):
            job_id = jobs.create("equivalence")

            def run():
                try:
                    state, payload = _search_result_payload(
                        equivalence_search(p1, p2, budget))
                    jobs.complete(job_id, state, result=payload)
                except Exception as exc:  # surfaced via the job state
                    jobs.complete(job_id, "error", error=str(exc))

            threading.Thread(target=run, daemon=True).start()
            return {"job_id": job_id, "state": "running"}
        _, payload = _search_result_payload(equivalence_search(p1, p2, budget))
        return payload

    @app.get("/search/jobs/{job_id}")
    async def job_status(job_id: str):
        return jobs.get(job_id)

    @app.post("/graph/explore")
    async def graph_explore(body: dict):
        p = _plat_from(body["plat"])
        max_level = int(body["max_level"])
        budget = _budget_from(body.get("budget"))
        rng_seed = int(body.get("rng_seed", 0))
        if body.get("async"):
            job_id = jobs.create("explore")

            def run():
                try:
                    graph = pg.explore(p, max_level, budget, rng_seed=rng_seed)
                    jobs.complete(job_id, "done", result=pg.to_json_dict(graph))
                except Exception as exc:
                    jobs.complete(job_id, "error", error=str(exc))

            threading.Thread(target=run, daemon=True).start()
            return {"job_id": job_id, "state": "running"}
        graph = pg.explore(p, max_level, budget, rng_seed=rng_seed)
        return pg.to_json_dict(graph)

    return app


def serve(port: int = 8042, bind: str = "127.0.0.1",
          state_dir: str | None = None):
    import uvicorn
    uvicorn.run(create_app(state_dir), host=bind, port=port, log_level="warning")

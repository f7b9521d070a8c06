"""REST service: generation, evaluation, the classical dataset, and experiments.

JSON over HTTP.  Error contract: malformed JSON bodies get 400, payloads
that violate invariants get 422, unknown resources get 404, and the
experiment cap returns 429; every error body carries a machine-readable
code.  Experiment state lives in memory only and is evicted a configurable
time after completion.
"""
from __future__ import annotations

import os
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import analysis
from .dataset import UnknownClassicalError, get_classical, list_classical
from .generate import MAX_GENERATION_BITS, RandomSource, random_bijective
from .sbox import SBox, SBoxError, is_bijective
from .search import RUNNING, SearchConfig, SearchState, local_search, progress


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message
        super().__init__(message)


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


class SBoxPayload(BaseModel):
    n: int
    m: int
    sbox: list[int]
    # Optional spectrum-flattening parameters, honored by the wcf property.
    x: int | None = None
    r: int | None = None

    def to_sbox(self) -> SBox:
        try:
            return SBox(n=self.n, m=self.m, table=tuple(self.sbox))
        except SBoxError as exc:
            raise ApiError(422, "invalid-payload", str(exc)) from None


class GenerateRequest(BaseModel):
    n: int
    seed: int | None = None


class ClassicalEntryModel(BaseModel):
    name: str
    n: int
    m: int
    sbox: list[int]
    nl: int
    du: int
    citation: str


class GeneratedSBox(BaseModel):
    n: int
    m: int
    sbox: list[int]
    seed: int


class EvaluationResponse(BaseModel):
    # bool before int: pydantic smart unions would otherwise coerce it
    value: bool | int | float | list[int] | dict


class ExperimentStarted(BaseModel):
    id: str
    seed: int


class ExperimentConfigModel(BaseModel):
    n: int
    target_nl: int
    max_iterations: int
    restarts: int
    wcf_x: int
    wcf_r: int
    seed: int


class ExperimentResource(BaseModel):
    id: str
    config: ExperimentConfigModel
    status: str
    iteration: int
    best_nl: int
    current_nl: int
    current_wcf: float | None
    progress: float
    result: dict | None = None


class ExperimentRequest(BaseModel):
    n: int = 8
    target_nl: int = 100
    max_iterations: int = Field(default=1_000_000, ge=1)
    restarts: int = Field(default=4, ge=0)
    wcf_x: int = 0
    wcf_r: int = 3
    seed: int | None = None


@dataclass
class ServiceConfig:
    max_experiments: int = 4
    experiment_ttl: float = 600.0
    cors_origin: str = "*"

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        return cls(
            max_experiments=int(os.environ.get("SBOXKIT_MAX_EXPERIMENTS", "4")),
            experiment_ttl=float(os.environ.get("SBOXKIT_EXPERIMENT_TTL", "600")),
            cors_origin=os.environ.get("SBOXKIT_CORS_ORIGIN", "*"),
        )


@dataclass
class Experiment:
    id: str
    config: SearchConfig
    created_at: float
    state: SearchState | None = None
    finished_at: float | None = None
    cancel: threading.Event = field(default_factory=threading.Event)
    thread: threading.Thread | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def snapshot(self) -> dict:
        with self.lock:
            state = self.state
            config = self.config
        body = {
            "id": self.id,
            "config": {
                "n": config.n,
                "target_nl": config.target_nl,
                "max_iterations": config.max_iterations,
                "restarts": config.restarts,
                "wcf_x": config.wcf_x,
                "wcf_r": config.wcf_r,
                "seed": config.seed,
            },
            "status": RUNNING,
            "iteration": 0,
            "best_nl": 0,
            "current_nl": 0,
            "current_wcf": None,
            "progress": 0.0,
        }
        if state is not None:
            body.update(
                status=state.status,
                iteration=state.iteration,
                best_nl=state.best_nl,
                current_nl=state.current_nl,
                current_wcf=state.current_wcf,
                progress=progress(state, config),
            )
            if state.status == "succeeded":
                body["result"] = {
                    "n": state.current.n,
                    "m": state.current.m,
                    "sbox": list(state.current.table),
                }
        return body


class ExperimentRegistry:
    """Synchronized id -> experiment map with TTL eviction of finished runs."""

    def __init__(self, config: ServiceConfig):
        self._config = config
        self._lock = threading.Lock()
        self._items: dict[str, Experiment] = {}

    def _evict_expired(self) -> None:
        now = time.monotonic()
        expired = [
            key
            for key, exp in self._items.items()
            if exp.finished_at is not None
            and now - exp.finished_at > self._config.experiment_ttl
        ]
        for key in expired:
            del self._items[key]

    def start(self, config: SearchConfig) -> Experiment:
        with self._lock:
            self._evict_expired()
            active = sum(1 for e in self._items.values() if e.finished_at is None)
            if active >= self._config.max_experiments:
                raise ApiError(
                    429,
                    "too-many-experiments",
                    f"at most {self._config.max_experiments} experiments may run at once",
                )
            experiment = Experiment(
                id=uuid.uuid4().hex, config=config, created_at=time.time()
            )
            self._items[experiment.id] = experiment

        def sink(state: SearchState) -> None:
            with experiment.lock:
                experiment.state = state

        def run() -> None:
            try:
                final = local_search(config, progress_sink=sink, cancel=experiment.cancel)
                with experiment.lock:
                    experiment.state = final
            finally:
                experiment.finished_at = time.monotonic()

        experiment.thread = threading.Thread(target=run, daemon=True)
        experiment.thread.start()
        return experiment

    def get(self, experiment_id: str) -> Experiment:
        with self._lock:
            self._evict_expired()
            experiment = self._items.get(experiment_id)
        if experiment is None:
            raise ApiError(404, "not-found", f"no experiment with id {experiment_id!r}")
        return experiment


_EVALUATORS = {
    "nl": lambda s: analysis.nonlinearity(s),
    "du": lambda s: analysis.differential_uniformity(s),
    "ccv": lambda s: analysis.ccv(s),
    "mto": lambda s: analysis.mto(s),
    "rto": lambda s: analysis.rto(s),
    "bijective": lambda s: is_bijective(s),
    "hw-signature": lambda s: list(analysis.hw_signature(s)),
}


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    app = FastAPI(title="sboxkit", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[config.cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = ExperimentRegistry(config)

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        if any(err.get("type") == "json_invalid" for err in exc.errors()):
            return _error_response(400, "malformed-json", "request body is not valid JSON")
        detail = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()
        )
        return _error_response(422, "invalid-payload", detail)

    @app.get("/api/classical", response_model=list[ClassicalEntryModel])
    async def classical() -> list[dict]:
        return [
            {
                "name": e.name,
                "n": e.n,
                "m": e.m,
                "sbox": list(e.sbox.table),
                "nl": e.ref_nl,
                "du": e.ref_du,
                "citation": e.citation,
            }
            for e in list_classical()
        ]

    # Alias kept for clients of older deployments that used PHP-style paths.
    app.add_api_route("/classicalSBoxes.php", classical, methods=["GET"])

    @app.get("/api/classical/{name}", response_model=ClassicalEntryModel)
    async def classical_by_name(name: str) -> dict:
        try:
            e = get_classical(name)
        except UnknownClassicalError as exc:
            raise ApiError(404, "not-found", str(exc)) from None
        return {
            "name": e.name,
            "n": e.n,
            "m": e.m,
            "sbox": list(e.sbox.table),
            "nl": e.ref_nl,
            "du": e.ref_du,
            "citation": e.citation,
        }

    @app.post("/api/generate", response_model=GeneratedSBox)
    async def generate(body: GenerateRequest) -> dict:
        if not 1 <= body.n <= MAX_GENERATION_BITS:
            raise ApiError(
                422, "n-out-of-range", f"n must be in [1, {MAX_GENERATION_BITS}]"
            )
        try:
            source = (
                RandomSource(body.seed)
                if body.seed is not None
                else RandomSource.from_entropy()
            )
        except SBoxError as exc:
            raise ApiError(422, "invalid-payload", str(exc)) from None
        box = random_bijective(body.n, source)
        return {"n": box.n, "m": box.m, "sbox": list(box.table), "seed": source.seed}

    def _evaluate(property_name: str, payload: SBoxPayload, x: int | None, r: int | None):
        box = payload.to_sbox()
        try:
            if property_name == "all":
                return analysis.evaluate_all(box).to_dict()
            if property_name == "wcf":
                x_param = x if x is not None else (payload.x if payload.x is not None else 0)
                r_param = r if r is not None else (payload.r if payload.r is not None else 3)
                return analysis.wcf(box, x_param, r_param)
            evaluator = _EVALUATORS.get(property_name)
            if evaluator is None:
                known = ", ".join(sorted([*_EVALUATORS, "wcf", "all"]))
                raise ApiError(
                    404, "unknown-property", f"unknown property {property_name!r}; known: {known}"
                )
            return evaluator(box)
        except SBoxError as exc:
            raise ApiError(422, "invalid-payload", str(exc)) from None

    @app.post("/api/evaluate/{property_name}", response_model=EvaluationResponse)
    async def evaluate(
        property_name: str,
        payload: SBoxPayload,
        x: int | None = None,
        r: int | None = None,
    ) -> dict:
        return {"value": _evaluate(property_name, payload, x, r)}

    # Alias kept for clients of older deployments that used PHP-style paths.
    @app.post("/wcfSBox.php", response_model=EvaluationResponse)
    async def wcf_alias(payload: SBoxPayload, x: int | None = None, r: int | None = None) -> dict:
        return {"value": _evaluate("wcf", payload, x, r)}

    @app.post("/api/experiments", status_code=201, response_model=ExperimentStarted)
    async def start_experiment(body: ExperimentRequest) -> dict:
        seed = body.seed if body.seed is not None else RandomSource.from_entropy().seed
        search_config = SearchConfig(
            n=body.n,
            target_nl=body.target_nl,
            max_iterations=body.max_iterations,
            restarts=body.restarts,
            wcf_x=body.wcf_x,
            wcf_r=body.wcf_r,
            seed=seed,
        )
        try:
            search_config.validate()
        except SBoxError as exc:
            raise ApiError(422, "invalid-config", str(exc)) from None
        experiment = registry.start(search_config)
        return {"id": experiment.id, "seed": seed}

    @app.get("/api/experiments/{experiment_id}", response_model=ExperimentResource)
    async def get_experiment(experiment_id: str) -> dict:
        return registry.get(experiment_id).snapshot()

    @app.delete("/api/experiments/{experiment_id}", status_code=202)
    async def cancel_experiment(experiment_id: str) -> dict:
        experiment = registry.get(experiment_id)
        experiment.cancel.set()
        return {"id": experiment_id, "cancelled": True}

    return app

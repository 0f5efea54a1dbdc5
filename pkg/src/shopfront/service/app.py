"""HTTP facade over instances, solver runs, Gantt data, and aspiration
sessions. All state lives in a RunStore directory plus in-process
registries for live runs and sessions."""
from __future__ import annotations

import itertools
import json
import threading
from typing import Dict, Optional, Tuple

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import aim
from ..errors import (ContractError, GenotypeError, NotConvergedError,
                      NotFoundError, ObjectiveError, ParseError, SchemaError)
from ..gantt import build_gantt
from ..instance_io import RunRecord, RunStore, write_extended_json
from ..model import Instance, ObjectiveSpec
from ..solvers import SolverConfig
from .jobs import DONE, FAILED, RunManager
from .schemas import (AimCreate, AimResult, AimState, FrontSolution,
                      GanttBarOut, GanttMachineOut, GanttOut, InstanceSummary,
                      InstanceUpload, LevelSet, RunCreated, RunRequest,
                      RunStatus)


def _summary(inst: Instance) -> InstanceSummary:
    return InstanceSummary(name=inst.name, kind=inst.kind,
                           jobs=inst.job_count, machines=inst.machine_count)


def _config_from_request(req: RunRequest) -> SolverConfig:
    overrides = {
        "population_size": req.population,
        "crossover_kind": req.crossover,
        "crossover_probability": req.crossover_probability,
        "mutation_probability": req.mutation_probability,
        "mutation_kind": req.mutation,
        "elite_fraction": req.elite_fraction,
        "neighborhood": req.neighborhood,
        "weight_count": req.weights,
        "initial_temperature": req.initial_temperature,
        "cooling_factor": req.cooling_factor,
        "chain_length": req.chain_length,
        "archive_capacity": req.archive_capacity,
    }
    kept = {key: value for key, value in overrides.items() if value is not None}
    return SolverConfig(method=req.method, budget=req.budget,
                        rng_seed=req.seed, **kept)


def create_app(store_path, max_workers: Optional[int] = None) -> FastAPI:
    store = RunStore(store_path)
    manager = RunManager(store, max_workers=max_workers)

    sessions: Dict[str, aim.AimSession] = {}
    session_locks: Dict[str, threading.Lock] = {}
    sessions_lock = threading.Lock()
    session_ids = itertools.count()

    app = FastAPI(title="shopfront", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.manager = manager
    app.state.store = store

    def _bad_request(exc: Exception) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ParseError)
    @app.exception_handler(SchemaError)
    @app.exception_handler(ContractError)
    @app.exception_handler(ObjectiveError)
    @app.exception_handler(GenotypeError)
    async def _unprocessable(request: Request, exc: Exception) -> JSONResponse:
        return _bad_request(exc)

    @app.exception_handler(NotFoundError)
    async def _missing(request: Request, exc: NotFoundError) -> JSONResponse:
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(NotConvergedError)
    async def _not_converged(request: Request,
                             exc: NotConvergedError) -> JSONResponse:
        return JSONResponse(status_code=409,
                            content={"detail": str(exc), "count": exc.count})

    # -- instances

    @app.get("/instances", response_model=list[InstanceSummary])
    def list_instances() -> list[InstanceSummary]:
        return [_summary(inst) for inst in store.list_instances()]

    @app.post("/instances", response_model=InstanceSummary, status_code=201)
    def upload_instance(body: InstanceUpload) -> InstanceSummary:
        name = body.name
        if body.format == "json" and name is None:
            # the document names itself; parse before deciding the store key
            from ..instance_io import parse_extended_json
            name = parse_extended_json(body.content).name
        if name is None:
            raise HTTPException(
                status_code=422,
                detail=f"a name is required for {body.format} uploads")
        try:
            store.instance_path(name)
        except NotFoundError:
            pass
        else:
            raise HTTPException(status_code=409,
                                detail=f"instance {name!r} already exists")
        inst = store.save_instance_text(name, body.content, body.format)
        return _summary(inst)

    @app.get("/instances/{name}")
    def get_instance(name: str) -> dict:
        inst = store.load_instance(name)
        return json.loads(write_extended_json(inst))

    # -- runs

    @app.post("/runs", response_model=RunCreated, status_code=201)
    def create_run(body: RunRequest) -> RunCreated:
        inst = store.load_instance(body.instance)
        spec = ObjectiveSpec(tuple(body.objectives))
        if spec.needs_due_dates() and not inst.has_due_dates():
            raise HTTPException(
                status_code=422,
                detail=f"instance {inst.name!r} has no due dates; "
                       f"objectives {spec} need them")
        config = _config_from_request(body)
        return RunCreated(id=manager.submit(inst, spec, config))

    @app.get("/runs/{run_id}", response_model=RunStatus,
             response_model_exclude_none=True)
    def run_status(run_id: str) -> RunStatus:
        state = manager.get(run_id)
        front_size = len(state.record.solutions) if state.record else None
        return RunStatus(id=run_id, state=state.state,
                         evaluations=state.evaluations,
                         front_size=front_size, error=state.error)

    def _finished_record(run_id: str) -> RunRecord:
        state = manager.get(run_id)
        if state.state == FAILED:
            raise HTTPException(status_code=409,
                                detail=f"run {run_id} failed: {state.error}")
        if state.state != DONE or state.record is None:
            raise HTTPException(status_code=409,
                                detail=f"run {run_id} is not finished")
        return state.record

    @app.get("/runs/{run_id}/front", response_model=list[FrontSolution])
    def run_front(run_id: str) -> list[FrontSolution]:
        record = _finished_record(run_id)
        return [FrontSolution(id=snap.solution_id, vector=list(snap.vector))
                for snap in record.solutions]

    @app.get("/runs/{run_id}/solutions/{solution_id}/gantt",
             response_model=GanttOut)
    def solution_gantt(run_id: str, solution_id: str) -> GanttOut:
        record = _finished_record(run_id)
        snap = next((s for s in record.solutions
                     if s.solution_id == solution_id), None)
        if snap is None:
            raise HTTPException(
                status_code=404,
                detail=f"run {run_id} has no solution {solution_id!r}")
        inst = store.load_instance(record.instance_name)
        data = build_gantt(snap.schedule, inst)
        return GanttOut(
            machines=[GanttMachineOut(
                machine=lane.machine,
                bars=[GanttBarOut(job=b.job, op=b.op, start=b.start, end=b.end)
                      for b in lane.bars])
                for lane in data.machines],
            horizon=data.horizon)

    # -- aspiration sessions

    def _session(session_id: str) -> Tuple[aim.AimSession, threading.Lock]:
        with sessions_lock:
            session = sessions.get(session_id)
            lock = session_locks.get(session_id)
        if session is None or lock is None:
            raise NotFoundError(f"no session {session_id!r}")
        return session, lock

    def _session_state(session_id: str, session: aim.AimSession) -> AimState:
        return AimState(id=session_id, levels=list(session.levels),
                        as_ids=list(session.accepted_ids),
                        not_as_ids=list(session.rejected_ids))

    @app.post("/aim", response_model=AimState, status_code=201)
    def create_session(body: AimCreate) -> AimState:
        record = _finished_record(body.run)
        front = [(snap.solution_id, snap.vector) for snap in record.solutions]
        session = aim.start_session(front)
        session_id = f"a{next(session_ids)}"
        with sessions_lock:
            sessions[session_id] = session
            session_locks[session_id] = threading.Lock()
        return _session_state(session_id, session)

    @app.patch("/aim/{session_id}/levels/{objective_index}",
               response_model=AimState)
    def set_level(session_id: str, objective_index: int,
                  body: LevelSet) -> AimState:
        _, lock = _session(session_id)
        with lock:
            session = sessions[session_id]
            updated = aim.set_level(session, objective_index, body.value)
            sessions[session_id] = updated
        return _session_state(session_id, updated)

    @app.post("/aim/{session_id}/finalize", response_model=AimResult)
    def finalize_session(session_id: str) -> AimResult:
        _, lock = _session(session_id)
        with lock:
            session = sessions[session_id]
            winner = aim.finalize(session)
        vector = dict(session.front)[winner]
        return AimResult(id=winner, vector=list(vector))

    return app

"""Background execution of solver runs over a bounded worker pool."""
from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Optional

from ..instance_io import RunRecord, RunStore, new_run_id
from ..model import Instance, ObjectiveSpec
from ..runs import execute_run
from ..solvers import SolverConfig

QUEUED = "queued"
RUNNING = "running"
DONE = "done"
FAILED = "failed"


@dataclass
class RunState:
    """Mutable status of one submitted run. Single writer (the worker);
    readers only see monotone state transitions."""
    run_id: str
    state: str = QUEUED
    evaluations: int = 0
    record: Optional[RunRecord] = None
    error: Optional[str] = None


class RunManager:
    """FIFO worker pool that executes runs and persists finished records."""

    def __init__(self, store: RunStore, max_workers: Optional[int] = None):
        self.store = store
        self._pool = ThreadPoolExecutor(
            max_workers=max_workers or os.cpu_count() or 2)
        self._runs: Dict[str, RunState] = {}
        self._lock = threading.Lock()

    def submit(self, inst: Instance, spec: ObjectiveSpec,
               config: SolverConfig) -> str:
        state = RunState(run_id=new_run_id())
        with self._lock:
            self._runs[state.run_id] = state
        self._pool.submit(self._execute, state, inst, spec, config)
        return state.run_id

    def _execute(self, state: RunState, inst: Instance, spec: ObjectiveSpec,
                 config: SolverConfig) -> None:
        state.state = RUNNING

        def progress(count: int) -> None:
            state.evaluations = count

        try:
            record = execute_run(inst, spec, config, run_id=state.run_id,
                                 on_progress=progress)
            self.store.save_run(record)
        except Exception as exc:  # surfaced through status polling
            state.error = f"{type(exc).__name__}: {exc}"
            state.state = FAILED
            return
        state.record = record
        state.evaluations = record.evaluations
        state.state = DONE

    def get(self, run_id: str) -> RunState:
        """Status of a live run, falling back to records persisted by
        earlier processes. Raises NotFoundError when neither exists."""
        with self._lock:
            state = self._runs.get(run_id)
        if state is not None:
            return state
        record = self.store.load_run(run_id)
        return RunState(run_id=run_id, state=DONE,
                        evaluations=record.evaluations, record=record)

    def shutdown(self) -> None:
        self._pool.shutdown(wait=False, cancel_futures=True)

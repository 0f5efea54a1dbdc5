"""Glue between solvers and persistence: execute a configured run and
freeze its archive into a RunRecord."""
from __future__ import annotations

from datetime import datetime, timezone
from typing import Callable, Optional

from .instance_io import RunRecord, new_run_id, snapshot_archive
from .model import Instance, ObjectiveSpec
from .solvers import SolverConfig, run_solver


def execute_run(inst: Instance, spec: ObjectiveSpec, config: SolverConfig,
                run_id: Optional[str] = None,
                on_progress: Optional[Callable[[int], None]] = None) -> RunRecord:
    result = run_solver(inst, spec, config, on_progress=on_progress)
    return RunRecord(
        run_id=run_id or new_run_id(),
        instance_name=inst.name,
        objectives=spec,
        config=config,
        solutions=snapshot_archive(result.archive),
        evaluations=result.evaluations,
        wall_time=result.wall_time,
        created_at=datetime.now(timezone.utc).isoformat(),
    )

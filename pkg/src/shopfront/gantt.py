"""Projection of a schedule into per-machine Gantt bars."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .model import Instance, Schedule


@dataclass(frozen=True)
class GanttBar:
    job: int
    op: int  # 1-based routing index
    start: int
    end: int


@dataclass(frozen=True)
class GanttMachine:
    machine: int
    bars: Tuple[GanttBar, ...]


@dataclass(frozen=True)
class GanttData:
    machines: Tuple[GanttMachine, ...]
    horizon: int  # the schedule's makespan


def build_gantt(schedule: Schedule, inst: Instance) -> GanttData:
    """Every operation exactly once, grouped per machine, sorted by start."""
    lanes: Dict[int, List[GanttBar]] = {m: [] for m in range(inst.machine_count)}
    for job in inst.jobs:
        for op in job.operations:
            start = schedule.start(job.id, op.index)
            lanes[op.machine].append(
                GanttBar(job=job.id, op=op.index, start=start,
                         end=start + op.duration))
    machines = tuple(
        GanttMachine(machine=m,
                     bars=tuple(sorted(lanes[m], key=lambda b: (b.start, b.job))))
        for m in range(inst.machine_count))
    horizon = max(schedule.completions.values())
    return GanttData(machines=machines, horizon=horizon)

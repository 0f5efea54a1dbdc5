"""Shared builders and independent schedule oracles.

The checkers here deliberately re-derive feasibility and activity from
first principles instead of reusing library code, so they can catch
decoder and builder bugs.
"""
from __future__ import annotations

import random
from typing import Dict, List, Tuple

from shopfront.model import Instance, Schedule, make_job


def build_t2() -> Instance:
    return Instance(
        name="tandem2", kind="job_shop", machine_count=2,
        jobs=(make_job(1, [(0, 3), (1, 2)], due=5),
              make_job(2, [(1, 2), (0, 4)], due=7)))


def random_instance(rng: random.Random, max_jobs: int = 5,
                    max_machines: int = 4, max_duration: int = 9,
                    allow_zero: bool = True, with_release: bool = True,
                    with_due: bool = True) -> Instance:
    n = rng.randint(1, max_jobs)
    m = rng.randint(1, max_machines)
    lo = 0 if allow_zero and rng.random() < 0.3 else 1
    jobs = []
    for j in range(1, n + 1):
        ops = [(rng.randrange(m), rng.randint(lo, max_duration))
               for _ in range(rng.randint(1, m + 1))]
        release = rng.randint(0, 5) if with_release and rng.random() < 0.5 else 0
        total = sum(p for _, p in ops)
        due = None
        if with_due and rng.random() < 0.5:
            due = release + rng.randint(0, 2 * total + 1)
        jobs.append(make_job(j, ops, release=release, due=due))
    return Instance(name=f"fuzz{rng.randrange(10**6)}", kind="job_shop",
                    machine_count=m, jobs=tuple(jobs))


def machine_intervals(sched: Schedule,
                      inst: Instance) -> Dict[int, List[Tuple[int, int, int, int]]]:
    """Per machine: (start, end, job, op index) for positive-length ops."""
    lanes: Dict[int, List[Tuple[int, int, int, int]]] = {}
    for job in inst.jobs:
        for op in job.operations:
            if op.duration == 0:
                continue
            start = sched.start(job.id, op.index)
            lanes.setdefault(op.machine, []).append(
                (start, start + op.duration, job.id, op.index))
    for lane in lanes.values():
        lane.sort()
    return lanes


def schedule_violations(sched: Schedule, inst: Instance) -> List[str]:
    """Routing, release, and machine-exclusivity violations, verbatim."""
    problems: List[str] = []
    for job in inst.jobs:
        first = sched.start(job.id, 1)
        if first < job.release:
            problems.append(f"job {job.id} starts at {first} before release {job.release}")
        for op in job.operations[1:]:
            prev = job.operations[op.index - 2]
            prev_end = sched.start(job.id, prev.index) + prev.duration
            if sched.start(job.id, op.index) < prev_end:
                problems.append(
                    f"job {job.id} op {op.index} overlaps its predecessor")
        last = job.operations[-1]
        expected = sched.start(job.id, last.index) + last.duration
        if sched.completion(job.id) != expected:
            problems.append(f"job {job.id} completion is not its last op's end")
    for machine, lane in machine_intervals(sched, inst).items():
        for (s1, e1, j1, k1), (s2, e2, j2, k2) in zip(lane, lane[1:]):
            if s2 < e1:
                problems.append(
                    f"machine {machine}: ({j1},{k1}) and ({j2},{k2}) overlap")
    return problems


def left_shift_exists(sched: Schedule, inst: Instance) -> bool:
    """True when some operation could start earlier in an idle gap of its
    machine without moving anything else (the schedule is then not active)."""
    lanes = machine_intervals(sched, inst)
    for job in inst.jobs:
        for op in job.operations:
            start = sched.start(job.id, op.index)
            if op.index == 1:
                ready = job.release
            else:
                prev = job.operations[op.index - 2]
                ready = sched.start(job.id, prev.index) + prev.duration
            if start <= ready:
                continue
            others = [iv for iv in lanes.get(op.machine, ())
                      if (iv[2], iv[3]) != (job.id, op.index)]
            # free windows up to the current start, earliest first
            cursor = 0
            windows = []
            for s, e, _, _ in others:
                if cursor < s:
                    windows.append((cursor, s))
                cursor = max(cursor, e)
            windows.append((cursor, start + op.duration))
            for lo, hi in windows:
                candidate = max(lo, ready)
                if candidate < start and candidate + op.duration <= hi:
                    return True
    return False

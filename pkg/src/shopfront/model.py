"""Domain model: instances, genotypes, schedules, and objective evaluation.

Solutions are encoded as operation sequences (job-id strings with
repetition) and decoded left-to-right into semi-active schedules by
appending each operation to its machine. All times are integers.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ContractError, GenotypeError, ObjectiveError

JOB_SHOP = "job_shop"
FLOW_SHOP = "flow_shop"

OBJECTIVE_NAMES = ("cmax", "csum", "tmax", "u")
DUE_DATE_OBJECTIVES = ("tmax", "u")


@dataclass(frozen=True)
class Operation:
    """One processing step: job `job`, routing position `index` (1-based),
    on machine `machine` (0-based) for `duration` time units."""

    job: int
    index: int
    machine: int
    duration: int


@dataclass(frozen=True)
class Job:
    id: int
    operations: Tuple[Operation, ...]
    release: int = 0
    due: Optional[int] = None

    @property
    def total_work(self) -> int:
        return sum(op.duration for op in self.operations)


@dataclass(frozen=True)
class Instance:
    name: str
    kind: str
    machine_count: int
    jobs: Tuple[Job, ...]

    def __post_init__(self):
        if self.kind not in (JOB_SHOP, FLOW_SHOP):
            raise ContractError(f"unknown instance kind {self.kind!r}")
        if self.machine_count < 1:
            raise ContractError("machine_count must be positive")
        if not self.jobs:
            raise ContractError("instance needs at least one job")
        seen = set()
        for job in self.jobs:
            if job.id in seen:
                raise ContractError(f"duplicate job id {job.id}")
            seen.add(job.id)
            if not job.operations:
                raise ContractError(f"job {job.id} has no operations")
            if job.release < 0:
                raise ContractError(f"job {job.id} has negative release date")
            if job.due is not None and job.due < 0:
                raise ContractError(f"job {job.id} has negative due date")
            for k, op in enumerate(job.operations, start=1):
                if op.job != job.id or op.index != k:
                    raise ContractError(
                        f"job {job.id}: operation at routing position {k} "
                        f"is labeled ({op.job},{op.index})")
                if not 0 <= op.machine < self.machine_count:
                    raise ContractError(
                        f"job {job.id} op {k}: machine {op.machine} out of range")
                if op.duration < 0:
                    raise ContractError(f"job {job.id} op {k}: negative duration")
            if self.kind == FLOW_SHOP:
                routing = tuple(op.machine for op in job.operations)
                if routing != tuple(range(self.machine_count)):
                    raise ContractError(
                        f"job {job.id}: flow shop routing must visit machines "
                        f"0..{self.machine_count - 1} in order")

    @property
    def job_count(self) -> int:
        return len(self.jobs)

    @property
    def total_operations(self) -> int:
        return sum(len(job.operations) for job in self.jobs)

    def job(self, job_id: int) -> Job:
        for job in self.jobs:
            if job.id == job_id:
                return job
        raise ContractError(f"no job with id {job_id}")

    def quotas(self) -> Dict[int, int]:
        """Gene quota per job id: how often each id must occur in a sequence."""
        return {job.id: len(job.operations) for job in self.jobs}

    def has_due_dates(self) -> bool:
        return all(job.due is not None for job in self.jobs)


def make_job(job_id: int, ops: Sequence[Tuple[int, int]], release: int = 0,
             due: Optional[int] = None) -> Job:
    """Build a Job from (machine, duration) pairs in routing order."""
    operations = tuple(
        Operation(job=job_id, index=k, machine=m, duration=p)
        for k, (m, p) in enumerate(ops, start=1))
    return Job(id=job_id, operations=operations, release=release, due=due)


@dataclass(frozen=True)
class ObjectiveSpec:
    """Ordered selection of objectives, all minimized."""

    names: Tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ObjectiveError("objective selection must be nonempty")
        seen = set()
        for name in self.names:
            if name not in OBJECTIVE_NAMES:
                raise ObjectiveError(f"unknown objective {name!r}")
            if name in seen:
                raise ObjectiveError(f"objective {name!r} selected twice")
            seen.add(name)

    @property
    def k(self) -> int:
        return len(self.names)

    def needs_due_dates(self) -> bool:
        return any(name in DUE_DATE_OBJECTIVES for name in self.names)

    @classmethod
    def parse(cls, text: str) -> "ObjectiveSpec":
        """Parse a comma-separated selection such as 'cmax,tmax'."""
        names = tuple(part.strip().lower() for part in text.split(",") if part.strip())
        return cls(names)

    def __str__(self) -> str:
        return ",".join(self.names)


# An objective vector is a plain tuple of ints, ordered per ObjectiveSpec.
ObjectiveVector = Tuple[int, ...]

# A genotype is a job-id sequence; job j occurs once per operation of j.
OperationSequence = Tuple[int, ...]


@dataclass
class Schedule:
    """Start time per (job, op index) plus derived completion time per job."""

    starts: Dict[Tuple[int, int], int]
    completions: Dict[int, int] = field(default_factory=dict)

    def start(self, job_id: int, index: int) -> int:
        return self.starts[(job_id, index)]

    def completion(self, job_id: int) -> int:
        return self.completions[job_id]


def validate_sequence(seq: Sequence[int], inst: Instance) -> None:
    """Raise GenotypeError unless `seq` matches the instance's job quotas."""
    counts = Counter(seq)
    for job in inst.jobs:
        want = len(job.operations)
        got = counts.pop(job.id, 0)
        if got != want:
            raise GenotypeError(
                f"job {job.id} occurs {got} times in sequence, expected {want}")
    if counts:
        job_id = next(iter(counts))
        raise GenotypeError(f"unknown job id {job_id} in sequence")


def decode_semi_active(seq: Sequence[int], inst: Instance) -> Schedule:
    """Decode a sequence into a semi-active schedule by appending.

    The i-th occurrence of job j schedules its i-th operation at the
    earliest time allowed by the machine frontier, the job frontier and
    the job's release date. No idle gap is ever filled, so the result is
    semi-active for the induced machine sequences.
    """
    validate_sequence(seq, inst)
    machine_free = [0] * inst.machine_count
    job_ready = {job.id: job.release for job in inst.jobs}
    next_op = {job.id: 0 for job in inst.jobs}
    jobs_by_id = {job.id: job for job in inst.jobs}
    starts: Dict[Tuple[int, int], int] = {}
    for gene in seq:
        job = jobs_by_id[gene]
        op = job.operations[next_op[gene]]
        begin = max(machine_free[op.machine], job_ready[gene])
        starts[(gene, op.index)] = begin
        end = begin + op.duration
        machine_free[op.machine] = end
        job_ready[gene] = end
        next_op[gene] += 1
    completions = {job.id: job_ready[job.id] for job in inst.jobs}
    return Schedule(starts=starts, completions=completions)


def evaluate(sched: Schedule, inst: Instance, spec: ObjectiveSpec) -> ObjectiveVector:
    """Evaluate the selected objectives from job completion times only."""
    completions = [sched.completion(job.id) for job in inst.jobs]
    values: List[int] = []
    for name in spec.names:
        if name == "cmax":
            values.append(max(completions))
        elif name == "csum":
            values.append(sum(completions))
        else:
            if not inst.has_due_dates():
                raise ObjectiveError(
                    f"objective {name!r} needs a due date on every job")
            tardiness = [max(sched.completion(job.id) - job.due, 0)
                         for job in inst.jobs]
            if name == "tmax":
                values.append(max(tardiness))
            else:  # u
                values.append(sum(1 for t in tardiness if t > 0))
    return tuple(values)


def as_rng(seed_or_rng) -> random.Random:
    """Accept either an int seed or a ready random.Random."""
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_sequence(inst: Instance, rng_seed) -> OperationSequence:
    """Uniformly shuffled valid sequence; deterministic for a fixed seed."""
    rng = as_rng(rng_seed)
    genes = [job.id for job in inst.jobs for _ in job.operations]
    rng.shuffle(genes)
    return tuple(genes)

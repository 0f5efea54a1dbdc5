"""The model-instance database: benchmark parsers, a generator, and
flat-file persistence for instances and solver runs."""
from __future__ import annotations

import itertools
import json
import math
import os
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (ContractError, IntegrityError, NotFoundError, ParseError,
                     SchemaError)
from .model import (FLOW_SHOP, JOB_SHOP, Instance, Job, ObjectiveSpec,
                    ObjectiveVector, OperationSequence, Schedule, as_rng,
                    make_job)
from .pareto import dominates
from .solvers import SolverConfig

INSTANCE_EXTENSIONS = (".json", ".jss", ".fsp")


def _data_lines(text: str):
    """Yield (1-based line number, token list), skipping blanks and # comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _int_token(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", line) from None


def parse_orlib_jobshop(text: str, name: str = "unnamed") -> Instance:
    """Parse the standard job-shop layout: a header line "n m", then one
    line per job holding m (machine, duration) pairs with 0-based machines."""
    lines = _data_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise ParseError("missing header line", 1) from None
    if len(header) != 2:
        raise ParseError(f"header needs two tokens, got {len(header)}", header_line)
    n = _int_token(header[0], header_line, "job count")
    m = _int_token(header[1], header_line, "machine count")
    if n < 1 or m < 1:
        raise ParseError("job and machine counts must be positive", header_line)
    jobs: List[Job] = []
    for j in range(1, n + 1):
        try:
            line, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"expected {n} job lines, found {j - 1}", header_line) from None
        if len(tokens) != 2 * m:
            raise ParseError(
                f"job line needs {2 * m} tokens, got {len(tokens)}", line)
        ops: List[Tuple[int, int]] = []
        for k in range(m):
            machine = _int_token(tokens[2 * k], line, "machine index")
            duration = _int_token(tokens[2 * k + 1], line, "duration")
            if not 0 <= machine < m:
                raise ParseError(f"machine index {machine} out of range", line)
            if duration < 0:
                raise ParseError(f"negative duration {duration}", line)
            ops.append((machine, duration))
        jobs.append(make_job(j, ops))
    return Instance(name=name, kind=JOB_SHOP, machine_count=m, jobs=tuple(jobs))


def parse_flowshop(text: str, name: str = "unnamed") -> Instance:
    """Parse the flow-shop layout: "n m", then n rows of m durations; every
    job visits machines 0..m-1 in order."""
    lines = _data_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise ParseError("missing header line", 1) from None
    if len(header) != 2:
        raise ParseError(f"header needs two tokens, got {len(header)}", header_line)
    n = _int_token(header[0], header_line, "job count")
    m = _int_token(header[1], header_line, "machine count")
    if n < 1 or m < 1:
        raise ParseError("job and machine counts must be positive", header_line)
    jobs: List[Job] = []
    for j in range(1, n + 1):
        try:
            line, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"expected {n} duration rows, found {j - 1}", header_line) from None
        if len(tokens) != m:
            raise ParseError(f"row needs {m} durations, got {len(tokens)}", line)
        durations = []
        for token in tokens:
            duration = _int_token(token, line, "duration")
            if duration < 0:
                raise ParseError(f"negative duration {duration}", line)
            durations.append(duration)
        jobs.append(make_job(j, list(enumerate(durations))))
    return Instance(name=name, kind=FLOW_SHOP, machine_count=m, jobs=tuple(jobs))


def _expect(condition: bool, message: str, path: str) -> None:
    if not condition:
        raise SchemaError(message, path)


def parse_extended_json(text: str) -> Instance:
    """Parse the extended instance document, the only format carrying
    release and due dates."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", "$") from None
    _expect(isinstance(doc, dict), "document must be an object", "$")
    _expect(isinstance(doc.get("name"), str) and doc["name"], "missing name", "$.name")
    _expect(doc.get("kind") in (JOB_SHOP, FLOW_SHOP),
            f"kind must be '{JOB_SHOP}' or '{FLOW_SHOP}'", "$.kind")
    machines = doc.get("machines")
    _expect(isinstance(machines, int) and machines >= 1,
            "machines must be a positive integer", "$.machines")
    raw_jobs = doc.get("jobs")
    _expect(isinstance(raw_jobs, list) and raw_jobs, "jobs must be a nonempty array", "$.jobs")
    jobs: List[Job] = []
    for i, raw in enumerate(raw_jobs):
        path = f"$.jobs[{i}]"
        _expect(isinstance(raw, dict), "job must be an object", path)
        job_id = raw.get("id")
        _expect(isinstance(job_id, int), "id must be an integer", f"{path}.id")
        release = raw.get("release", 0)
        _expect(isinstance(release, int) and release >= 0,
                "release must be a nonnegative integer", f"{path}.release")
        due = raw.get("due")
        _expect(due is None or (isinstance(due, int) and due >= 0),
                "due must be a nonnegative integer when present", f"{path}.due")
        raw_ops = raw.get("ops")
        _expect(isinstance(raw_ops, list) and raw_ops,
                "ops must be a nonempty array", f"{path}.ops")
        ops: List[Tuple[int, int]] = []
        for k, raw_op in enumerate(raw_ops):
            op_path = f"{path}.ops[{k}]"
            _expect(isinstance(raw_op, dict), "op must be an object", op_path)
            machine = raw_op.get("machine")
            _expect(isinstance(machine, int) and 0 <= machine < machines,
                    f"machine must be in [0,{machines})", f"{op_path}.machine")
            duration = raw_op.get("duration")
            _expect(isinstance(duration, int) and duration >= 0,
                    "duration must be a nonnegative integer", f"{op_path}.duration")
            ops.append((machine, duration))
        jobs.append(make_job(job_id, ops, release=release, due=due))
    try:
        return Instance(name=doc["name"], kind=doc["kind"],
                        machine_count=machines, jobs=tuple(jobs))
    except ContractError as exc:
        raise SchemaError(str(exc), "$.jobs") from None


def write_extended_json(inst: Instance) -> str:
    doc = {
        "name": inst.name,
        "kind": inst.kind,
        "machines": inst.machine_count,
        "jobs": [
            {
                "id": job.id,
                "release": job.release,
                **({"due": job.due} if job.due is not None else {}),
                "ops": [{"machine": op.machine, "duration": op.duration}
                        for op in job.operations],
            }
            for job in inst.jobs
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_orlib_jobshop(inst: Instance) -> str:
    """Render the standard job-shop layout. Release and due dates have no
    slot in this format and are dropped."""
    if inst.kind != JOB_SHOP:
        raise ContractError(f"cannot write a {inst.kind} instance as job-shop rows")
    lines = [f"{inst.job_count} {inst.machine_count}"]
    for job in inst.jobs:
        lines.append("  ".join(f"{op.machine} {op.duration}"
                               for op in job.operations))
    return "\n".join(lines) + "\n"


def write_flowshop(inst: Instance) -> str:
    """Render the flow-shop layout: one duration row per job."""
    if inst.kind != FLOW_SHOP:
        raise ContractError(f"cannot write a {inst.kind} instance as duration rows")
    lines = [f"{inst.job_count} {inst.machine_count}"]
    for job in inst.jobs:
        lines.append(" ".join(str(op.duration) for op in job.operations))
    return "\n".join(lines) + "\n"


def write_instance_text(inst: Instance, fmt: str) -> str:
    if fmt == "json":
        return write_extended_json(inst)
    if fmt == "jss":
        return write_orlib_jobshop(inst)
    if fmt == "fsp":
        return write_flowshop(inst)
    raise ContractError(f"unknown instance format {fmt!r}")


def generate_random_instance(n: int, m: int, duration_range: Tuple[int, int],
                             due_factor: Optional[float] = None,
                             rng_seed=0, name: Optional[str] = None) -> Instance:
    """Random job shop: one uniformly shuffled machine permutation per job,
    uniform integer durations, optional due dates from total work content."""
    lo, hi = duration_range
    if not (1 <= lo <= hi):
        raise ContractError("duration range needs 1 <= lo <= hi")
    if n < 1 or m < 1:
        raise ContractError("need at least one job and one machine")
    if due_factor is not None and due_factor < 0:
        raise ContractError("due_factor must be nonnegative")
    rng = as_rng(rng_seed)
    jobs: List[Job] = []
    for j in range(1, n + 1):
        routing = list(range(m))
        rng.shuffle(routing)
        ops = [(machine, rng.randint(lo, hi)) for machine in routing]
        due = None
        if due_factor is not None:
            due = math.ceil(due_factor * sum(p for _, p in ops))
        jobs.append(make_job(j, ops, due=due))
    return Instance(name=name or f"rand-{n}x{m}", kind=JOB_SHOP,
                    machine_count=m, jobs=tuple(jobs))


def load_instance_text(text: str, fmt: str, name: str = "unnamed") -> Instance:
    if fmt == "json":
        return parse_extended_json(text)
    if fmt == "jss":
        return parse_orlib_jobshop(text, name=name)
    if fmt == "fsp":
        return parse_flowshop(text, name=name)
    raise ContractError(f"unknown instance format {fmt!r}")


def load_instance_file(path) -> Instance:
    """Load an instance file, format chosen by extension."""
    path = Path(path)
    ext = path.suffix.lower().lstrip(".")
    if not path.is_file():
        raise NotFoundError(f"no instance file at {path}")
    return load_instance_text(path.read_text(), ext, name=path.stem)


# ---------------------------------------------------------------------------
# Run persistence


@dataclass
class SolutionSnapshot:
    """One archive entry frozen into a run record."""
    solution_id: str
    vector: ObjectiveVector
    sequence: OperationSequence
    schedule: Schedule


@dataclass
class RunRecord:
    run_id: str
    instance_name: str
    objectives: ObjectiveSpec
    config: SolverConfig
    solutions: List[SolutionSnapshot]
    evaluations: int
    wall_time: float
    created_at: str


_run_counter = itertools.count(1)


def new_run_id() -> str:
    """Content-independent unique id: UTC timestamp plus a process counter."""
    stamp = time.strftime("%Y%m%dT%H%M%S", time.gmtime())
    return f"{stamp}-{os.getpid()}-{next(_run_counter):06d}"


def snapshot_archive(archive) -> List[SolutionSnapshot]:
    """Freeze archive entries with stable ids s0, s1, ... assigned in
    lexicographic vector order."""
    entries = sorted(archive.entries, key=lambda e: e.vector)
    return [SolutionSnapshot(solution_id=f"s{i}", vector=e.vector,
                             sequence=e.sequence, schedule=e.schedule)
            for i, e in enumerate(entries)]


def _schedule_to_doc(schedule: Schedule) -> dict:
    starts: Dict[str, List[int]] = {}
    for (job_id, index), start in sorted(schedule.starts.items()):
        starts.setdefault(str(job_id), [])
        ops = starts[str(job_id)]
        assert index == len(ops) + 1
        ops.append(start)
    return {"starts": starts,
            "completions": {str(j): c for j, c in sorted(schedule.completions.items())}}


def _schedule_from_doc(doc: dict) -> Schedule:
    starts = {}
    for job_key, values in doc["starts"].items():
        for index, start in enumerate(values, start=1):
            starts[(int(job_key), index)] = start
    completions = {int(j): c for j, c in doc["completions"].items()}
    return Schedule(starts=starts, completions=completions)


def record_to_doc(record: RunRecord) -> dict:
    return {
        "run_id": record.run_id,
        "instance": record.instance_name,
        "objectives": str(record.objectives),
        "config": record.config.to_dict(),
        "evaluations": record.evaluations,
        "wall_time": record.wall_time,
        "created_at": record.created_at,
        "solutions": [
            {
                "id": s.solution_id,
                "vector": list(s.vector),
                "sequence": list(s.sequence),
                "schedule": _schedule_to_doc(s.schedule),
            }
            for s in record.solutions
        ],
    }


def record_from_doc(doc: dict) -> RunRecord:
    try:
        solutions = [
            SolutionSnapshot(
                solution_id=raw["id"],
                vector=tuple(raw["vector"]),
                sequence=tuple(raw["sequence"]),
                schedule=_schedule_from_doc(raw["schedule"]),
            )
            for raw in doc["solutions"]
        ]
        record = RunRecord(
            run_id=doc["run_id"],
            instance_name=doc["instance"],
            objectives=ObjectiveSpec.parse(doc["objectives"]),
            config=SolverConfig.from_dict(doc["config"]),
            solutions=solutions,
            evaluations=doc["evaluations"],
            wall_time=doc["wall_time"],
            created_at=doc["created_at"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise IntegrityError(f"malformed run document: {exc}") from None
    vectors = [s.vector for s in record.solutions]
    for i, a in enumerate(vectors):
        for j, b in enumerate(vectors):
            if i != j and (a == b or dominates(a, b)):
                raise IntegrityError(
                    f"archive snapshot violates nondominance: {a} vs {b}")
    return record


class RunStore:
    """Flat-file store: <root>/instances/* and <root>/runs/<id>.json."""

    def __init__(self, root):
        self.root = Path(root)
        self.instances_dir = self.root / "instances"
        self.runs_dir = self.root / "runs"
        self.instances_dir.mkdir(parents=True, exist_ok=True)
        self.runs_dir.mkdir(parents=True, exist_ok=True)

    # -- runs

    def save_run(self, record: RunRecord) -> str:
        path = self.runs_dir / f"{record.run_id}.json"
        path.write_text(json.dumps(record_to_doc(record), indent=2) + "\n")
        return record.run_id

    def load_run(self, run_id: str) -> RunRecord:
        path = self.runs_dir / f"{run_id}.json"
        if not path.is_file():
            raise NotFoundError(f"no run {run_id!r} in store")
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise IntegrityError(f"run {run_id!r} is not valid JSON: {exc.msg}") from None
        return record_from_doc(doc)

    def list_runs(self) -> List[str]:
        return sorted(p.stem for p in self.runs_dir.glob("*.json"))

    # -- instances

    def save_instance_text(self, name: str, text: str, fmt: str) -> Instance:
        inst = load_instance_text(text, fmt, name=name)
        if fmt == "json" and inst.name != name:
            # store identity is the file stem; rewrite so both agree
            inst = Instance(name=name, kind=inst.kind,
                            machine_count=inst.machine_count, jobs=inst.jobs)
            text = write_extended_json(inst)
        path = self.instances_dir / f"{name}.{fmt}"
        path.write_text(text if text.endswith("\n") else text + "\n")
        return inst

    def save_instance(self, inst: Instance) -> None:
        path = self.instances_dir / f"{inst.name}.json"
        path.write_text(write_extended_json(inst))

    def instance_path(self, name: str) -> Path:
        for ext in INSTANCE_EXTENSIONS:
            path = self.instances_dir / f"{name}{ext}"
            if path.is_file():
                return path
        raise NotFoundError(f"no instance {name!r} in store")

    def load_instance(self, name: str) -> Instance:
        return load_instance_file(self.instance_path(name))

    def list_instances(self) -> List[Instance]:
        paths = sorted(p for p in self.instances_dir.iterdir()
                       if p.suffix.lower() in INSTANCE_EXTENSIONS)
        return [load_instance_file(p) for p in paths]


def save_run(record: RunRecord, store_path) -> str:
    return RunStore(store_path).save_run(record)


def load_run(store_path, run_id: str) -> RunRecord:
    return RunStore(store_path).load_run(run_id)

"""Request and response bodies for the HTTP service."""
from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class InstanceSummary(BaseModel):
    name: str
    kind: str
    jobs: int
    machines: int


class InstanceUpload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    format: Literal["json", "jss", "fsp"]
    content: str
    name: Optional[str] = None  # required for jss/fsp, optional for json


class RunRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    instance: str
    method: str
    budget: int = Field(ge=1)
    objectives: List[str] = Field(min_length=1)
    seed: int = 0
    population: Optional[int] = None
    crossover: Optional[str] = None
    crossover_probability: Optional[float] = None
    mutation_probability: Optional[float] = None
    mutation: Optional[str] = None
    elite_fraction: Optional[float] = None
    neighborhood: Optional[str] = None
    weights: Optional[int] = None
    initial_temperature: Optional[float] = None
    cooling_factor: Optional[float] = None
    chain_length: Optional[int] = None
    archive_capacity: Optional[int] = None


class RunCreated(BaseModel):
    id: str


class RunStatus(BaseModel):
    id: str
    state: Literal["queued", "running", "done", "failed"]
    evaluations: int
    front_size: Optional[int] = None
    error: Optional[str] = None


class FrontSolution(BaseModel):
    id: str
    vector: List[int]


class GanttBarOut(BaseModel):
    job: int
    op: int
    start: int
    end: int


class GanttMachineOut(BaseModel):
    machine: int
    bars: List[GanttBarOut]


class GanttOut(BaseModel):
    machines: List[GanttMachineOut]
    horizon: int


class AimCreate(BaseModel):
    model_config = ConfigDict(extra="forbid")

    run: str


class AimState(BaseModel):
    id: str
    levels: List[int]
    as_ids: List[str]
    not_as_ids: List[str]


class LevelSet(BaseModel):
    model_config = ConfigDict(extra="forbid")

    value: int


class AimResult(BaseModel):
    id: str
    vector: List[int]

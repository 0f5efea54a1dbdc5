"""Solver method names and the shared configuration record."""
from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Optional

from ..errors import ContractError

METHOD_PRIORITY = "priority_portfolio"
METHOD_HILLCLIMB = "hillclimb"
METHOD_MOEA = "moea"
METHOD_MOSA = "mosa"
METHODS = (METHOD_PRIORITY, METHOD_HILLCLIMB, METHOD_MOEA, METHOD_MOSA)

# Accepted aliases on user-facing surfaces (CLI flags, HTTP payloads).
METHOD_ALIASES = {
    "priority": METHOD_PRIORITY,
    "portfolio": METHOD_PRIORITY,
}

NEIGHBORHOODS = ("adjacent_swap", "general_swap", "shift")
MUTATION_KINDS = ("swap", "shift")
CROSSOVER_KINDS = ("uobx", "obx", "tpox", "pmx")


def canonical_method(name: str) -> str:
    name = name.strip().lower()
    name = METHOD_ALIASES.get(name, name)
    if name not in METHODS:
        raise ContractError(f"unknown method {name!r}; expected one of {METHODS}")
    return name


@dataclass
class SolverConfig:
    """Control parameters for one solver run.

    Only the fields relevant to `method` are consulted; the rest keep
    their defaults so configs stay comparable and serializable.
    """

    method: str
    budget: int
    rng_seed: int = 0
    # population methods (hillclimb points / moea individuals)
    population_size: int = 8
    # moea
    crossover_kind: str = "uobx"
    crossover_probability: float = 0.9
    mutation_probability: float = 0.3
    mutation_kind: str = "swap"
    elite_fraction: float = 0.25
    # hillclimb
    neighborhood: str = "general_swap"
    # mosa
    weight_count: int = 3
    initial_temperature: float = 10.0
    cooling_factor: float = 0.95
    chain_length: int = 10
    # archive safety valve; None keeps every nondominated vector
    archive_capacity: Optional[int] = None

    def __post_init__(self):
        self.method = canonical_method(self.method)
        if self.budget < 1:
            raise ContractError("budget must be >= 1")
        if self.method == METHOD_MOEA and self.population_size < 2:
            raise ContractError("moea needs population_size >= 2")
        if self.population_size < 1:
            raise ContractError("population_size must be >= 1")
        if not 0.0 < self.cooling_factor < 1.0:
            raise ContractError("cooling_factor must lie in (0,1)")
        if self.weight_count < 1:
            raise ContractError("weight_count must be >= 1")
        if self.initial_temperature <= 0:
            raise ContractError("initial_temperature must be positive")
        if self.chain_length < 1:
            raise ContractError("chain_length must be >= 1")
        if not 0.0 <= self.mutation_probability <= 1.0:
            raise ContractError("mutation_probability must lie in [0,1]")
        if not 0.0 <= self.crossover_probability <= 1.0:
            raise ContractError("crossover_probability must lie in [0,1]")
        if not 0.0 <= self.elite_fraction <= 1.0:
            raise ContractError("elite_fraction must lie in [0,1]")
        if self.neighborhood not in NEIGHBORHOODS:
            raise ContractError(f"unknown neighborhood {self.neighborhood!r}")
        if self.mutation_kind not in MUTATION_KINDS:
            raise ContractError(f"unknown mutation kind {self.mutation_kind!r}")
        if self.crossover_kind not in CROSSOVER_KINDS:
            raise ContractError(f"unknown crossover kind {self.crossover_kind!r}")
        if self.archive_capacity is not None and self.archive_capacity < 1:
            raise ContractError("archive_capacity must be positive")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SolverConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ContractError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)

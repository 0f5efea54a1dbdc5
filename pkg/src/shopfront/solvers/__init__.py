"""The method database: four Pareto-approximation solver families."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from ..model import Instance, ObjectiveSpec
from ..pareto import Archive
from .config import (CROSSOVER_KINDS, METHOD_HILLCLIMB, METHOD_MOEA,
                     METHOD_MOSA, METHOD_PRIORITY, METHODS, MUTATION_KINDS,
                     NEIGHBORHOODS, SolverConfig, canonical_method)
from .engine import Evaluator
from .giffler_thompson import (DETERMINISTIC_RULES, RULES, applicable_rules,
                               giffler_thompson, giffler_thompson_sequence,
                               priority_portfolio)
from .hillclimb import hillclimb, neighborhood
from .moea import moea_run
from .mosa import mosa_accept_probability, mosa_run, simplex_weights
from .operators import crossover, mutate, pareto_rank

_DISPATCH = {
    METHOD_PRIORITY: priority_portfolio,
    METHOD_HILLCLIMB: hillclimb,
    METHOD_MOEA: moea_run,
    METHOD_MOSA: mosa_run,
}


@dataclass
class SolverRun:
    """A finished run: the archive plus its accounting."""
    archive: Archive
    evaluations: int
    wall_time: float


def run_solver(inst: Instance, spec: ObjectiveSpec, config: SolverConfig,
               on_progress: Optional[Callable[[int], None]] = None) -> SolverRun:
    """Dispatch to the configured method and report evaluation accounting."""
    solver = _DISPATCH[canonical_method(config.method)]
    evaluator = Evaluator(inst, spec, config.budget,
                          Archive(config.archive_capacity),
                          on_progress=on_progress)
    started = time.perf_counter()
    archive = solver(inst, spec, config, evaluator=evaluator)
    elapsed = time.perf_counter() - started
    return SolverRun(archive=archive, evaluations=evaluator.count,
                     wall_time=elapsed)


__all__ = [
    "SolverConfig", "SolverRun", "run_solver", "Evaluator",
    "METHODS", "METHOD_PRIORITY", "METHOD_HILLCLIMB", "METHOD_MOEA",
    "METHOD_MOSA", "NEIGHBORHOODS", "MUTATION_KINDS", "CROSSOVER_KINDS",
    "RULES", "DETERMINISTIC_RULES", "applicable_rules",
    "giffler_thompson", "giffler_thompson_sequence", "priority_portfolio",
    "hillclimb", "neighborhood", "moea_run", "mosa_run",
    "mosa_accept_probability", "simplex_weights",
    "crossover", "mutate", "pareto_rank", "canonical_method",
]

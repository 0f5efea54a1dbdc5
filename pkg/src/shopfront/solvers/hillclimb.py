"""Multi-point hillclimber over sequence neighborhoods.

Each point scans its neighborhood in a fixed order and moves to the first
neighbor whose vector strictly dominates the incumbent's. Points that no
neighbor dominates are locally optimal and restart from a fresh random
sequence. All evaluations feed one shared archive until the budget is out.
"""
from __future__ import annotations

from typing import Iterator, List, Optional, Sequence

from ..model import Instance, ObjectiveSpec, OperationSequence, as_rng, random_sequence
from ..pareto import Archive, dominates
from ..errors import ContractError
from .config import NEIGHBORHOODS, SolverConfig
from .engine import BudgetExhausted, Evaluator
from .operators import shift_move, swap_move


def neighborhood(seq: Sequence[int], kind: str) -> Iterator[OperationSequence]:
    """Deterministic neighbor enumeration; identity moves are skipped."""
    if kind not in NEIGHBORHOODS:
        raise ContractError(f"unknown neighborhood {kind!r}")
    return _neighbors(tuple(seq), kind)


def _neighbors(seq: Sequence[int], kind: str) -> Iterator[OperationSequence]:
    size = len(seq)
    if kind == "adjacent_swap":
        for i in range(size - 1):
            if seq[i] != seq[i + 1]:
                yield swap_move(seq, i, i + 1)
    elif kind == "general_swap":
        for i in range(size - 1):
            for j in range(i + 1, size):
                if seq[i] != seq[j]:
                    yield swap_move(seq, i, j)
    else:  # shift
        for i in range(size):
            for j in range(size):
                if i == j:
                    continue
                moved = shift_move(seq, i, j)
                if moved != tuple(seq):
                    yield moved


class _Point:
    __slots__ = ("seq", "vector", "local_optimum")

    def __init__(self, seq, vector):
        self.seq = seq
        self.vector = vector
        self.local_optimum = False


def hillclimb(inst: Instance, spec: ObjectiveSpec, config: SolverConfig,
              evaluator: Optional[Evaluator] = None) -> Archive:
    ev = evaluator if evaluator is not None else Evaluator(
        inst, spec, config.budget, Archive(config.archive_capacity))
    rng = as_rng(config.rng_seed)
    points: List[_Point] = []
    try:
        for _ in range(config.population_size):
            seq = random_sequence(inst, rng)
            vector, _ = ev.evaluate_sequence(seq)
            points.append(_Point(seq, vector))
        while True:
            for point in points:
                improved = False
                for neighbor in neighborhood(point.seq, config.neighborhood):
                    vector, _ = ev.evaluate_sequence(neighbor)
                    if dominates(vector, point.vector):
                        point.seq = neighbor
                        point.vector = vector
                        improved = True
                        break  # first improvement
                if not improved:
                    point.local_optimum = True
                    seq = random_sequence(inst, rng)
                    vector, _ = ev.evaluate_sequence(seq)
                    point.seq = seq
                    point.vector = vector
                    point.local_optimum = False
    except BudgetExhausted:
        pass
    return ev.archive

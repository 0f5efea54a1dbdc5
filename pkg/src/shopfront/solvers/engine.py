"""Budget-counted evaluation shared by all solver families."""
from __future__ import annotations

from typing import Callable, Optional, Sequence, Tuple

from ..model import (Instance, ObjectiveSpec, ObjectiveVector, Schedule,
                     decode_semi_active, evaluate)
from ..pareto import Archive


class BudgetExhausted(Exception):
    """Internal control flow: raised instead of evaluating past the budget."""


class Evaluator:
    """Decodes, evaluates, archives, and counts every evaluation.

    Solvers obtain every objective vector through this wrapper so the
    evaluation budget is enforced in exactly one place.
    """

    def __init__(self, inst: Instance, spec: ObjectiveSpec, budget: int,
                 archive: Optional[Archive] = None,
                 on_progress: Optional[Callable[[int], None]] = None):
        self.inst = inst
        self.spec = spec
        self.budget = budget
        self.archive = archive if archive is not None else Archive()
        self.count = 0
        self._on_progress = on_progress

    @property
    def exhausted(self) -> bool:
        return self.count >= self.budget

    def evaluate_sequence(self, seq: Sequence[int]) -> Tuple[ObjectiveVector, Schedule]:
        if self.exhausted:
            raise BudgetExhausted()
        schedule = decode_semi_active(seq, self.inst)
        vector = evaluate(schedule, self.inst, self.spec)
        self.count += 1
        self.archive.insert(vector, sequence=seq, schedule=schedule)
        if self._on_progress is not None:
            self._on_progress(self.count)
        return vector, schedule

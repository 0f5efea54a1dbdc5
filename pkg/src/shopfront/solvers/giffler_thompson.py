"""Active-schedule construction with priority dispatching rules.

The builder iterates: among the next unscheduled operation of every job,
find the earliest-finishing one (completion C* on machine M*), form the
conflict set of candidates on M* that could start before C*, and let the
priority rule pick the winner. Appending the winners in pick order makes
the resulting schedule active.
"""
from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

from ..errors import ContractError, ObjectiveError
from ..model import (Instance, Job, ObjectiveSpec, ObjectiveVector, Operation,
                     OperationSequence, Schedule, as_rng, decode_semi_active,
                     evaluate)
from ..pareto import Archive
from .config import SolverConfig
from .engine import BudgetExhausted, Evaluator

RULE_SPT = "spt"
RULE_LPT = "lpt"
RULE_EDD = "edd"
RULE_FCFS = "fcfs"
RULE_MWR = "mwr"
RULE_RANDOM = "random"
RULES = (RULE_SPT, RULE_LPT, RULE_EDD, RULE_FCFS, RULE_MWR, RULE_RANDOM)
DETERMINISTIC_RULES = (RULE_SPT, RULE_LPT, RULE_EDD, RULE_FCFS, RULE_MWR)


class _Candidate:
    __slots__ = ("job", "op", "ready", "start", "finish", "remaining")

    def __init__(self, job: Job, op: Operation, ready: int, start: int,
                 remaining: int):
        self.job = job
        self.op = op
        self.ready = ready          # when the operation became available
        self.start = start          # earliest start on its machine
        self.finish = start + op.duration
        self.remaining = remaining  # work left in the job, candidate included


def _pick(conflict: List[_Candidate], rule: str,
          rng: Optional[random.Random]) -> _Candidate:
    if rule == RULE_SPT:
        return min(conflict, key=lambda c: (c.op.duration, c.job.id))
    if rule == RULE_LPT:
        return min(conflict, key=lambda c: (-c.op.duration, c.job.id))
    if rule == RULE_EDD:
        return min(conflict, key=lambda c: (c.job.due, c.job.id))
    if rule == RULE_FCFS:
        return min(conflict, key=lambda c: (c.ready, c.job.id))
    if rule == RULE_MWR:
        return min(conflict, key=lambda c: (-c.remaining, c.job.id))
    if rule == RULE_RANDOM:
        if rng is None:
            raise ContractError("random rule needs an rng or seed")
        return conflict[rng.randrange(len(conflict))]
    raise ContractError(f"unknown priority rule {rule!r}")


def giffler_thompson_sequence(inst: Instance, rule: str,
                              rng_seed=None) -> OperationSequence:
    """Run the builder and return the pick order as a genotype.

    Decoding that genotype reproduces the built schedule exactly, because
    the builder and the decoder share the frontier rule.
    """
    if rule not in RULES:
        raise ContractError(f"unknown priority rule {rule!r}")
    if rule == RULE_EDD and not inst.has_due_dates():
        raise ObjectiveError("edd rule needs a due date on every job")
    rng = as_rng(rng_seed) if (rng_seed is not None or rule == RULE_RANDOM) else None

    next_k = {job.id: 0 for job in inst.jobs}
    job_ready = {job.id: job.release for job in inst.jobs}
    machine_free = [0] * inst.machine_count
    remaining_work = {job.id: job.total_work for job in inst.jobs}
    genes: List[int] = []
    total = inst.total_operations

    while len(genes) < total:
        candidates: List[_Candidate] = []
        for job in inst.jobs:
            k = next_k[job.id]
            if k >= len(job.operations):
                continue
            op = job.operations[k]
            ready = job_ready[job.id]
            start = max(ready, machine_free[op.machine])
            candidates.append(_Candidate(job, op, ready, start,
                                         remaining_work[job.id]))
        best = min(candidates, key=lambda c: (c.finish, c.op.machine, c.job.id))
        conflict = [c for c in candidates
                    if c.op.machine == best.op.machine and c.start < best.finish]
        if not conflict:  # zero-duration corner: best itself has start == finish
            conflict = [best]
        chosen = _pick(conflict, rule, rng)
        job_id = chosen.job.id
        end = chosen.start + chosen.op.duration
        machine_free[chosen.op.machine] = end
        job_ready[job_id] = end
        remaining_work[job_id] -= chosen.op.duration
        next_k[job_id] += 1
        genes.append(job_id)
    return tuple(genes)


def giffler_thompson(inst: Instance, rule: str, spec: ObjectiveSpec,
                     rng_seed=None) -> Tuple[Schedule, ObjectiveVector]:
    """Build one active schedule under the given rule and evaluate it."""
    seq = giffler_thompson_sequence(inst, rule, rng_seed)
    schedule = decode_semi_active(seq, inst)
    return schedule, evaluate(schedule, inst, spec)


def applicable_rules(inst: Instance) -> Tuple[str, ...]:
    """The deterministic rules that this instance's data supports."""
    rules = [r for r in DETERMINISTIC_RULES
             if r != RULE_EDD or inst.has_due_dates()]
    return tuple(rules)


def priority_portfolio(inst: Instance, spec: ObjectiveSpec,
                       config: SolverConfig,
                       evaluator: Optional[Evaluator] = None) -> Archive:
    """Every applicable deterministic rule once, then random-rule
    replications until the budget is spent; one shared archive."""
    rules = applicable_rules(inst)
    if config.budget < len(rules):
        raise ContractError(
            f"budget {config.budget} below the {len(rules)} applicable rules")
    ev = evaluator if evaluator is not None else Evaluator(
        inst, spec, config.budget)
    rng = as_rng(config.rng_seed)
    try:
        for rule in rules:
            ev.evaluate_sequence(giffler_thompson_sequence(inst, rule))
        while not ev.exhausted:
            ev.evaluate_sequence(
                giffler_thompson_sequence(inst, RULE_RANDOM, rng))
    except BudgetExhausted:
        pass
    return ev.archive

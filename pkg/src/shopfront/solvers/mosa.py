"""Weighted-scalarization simulated annealing, one chain per weight vector.

Every chain anneals independently (own temperature, own running objective
ranges) but all evaluations feed one shared archive. Chains advance
round-robin so the budget cuts them off evenly.
"""
from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

from ..errors import ContractError
from ..model import Instance, ObjectiveSpec, as_rng, random_sequence
from ..pareto import Archive
from .config import SolverConfig
from .engine import BudgetExhausted, Evaluator
from .operators import mutate


def mosa_accept_probability(delta: float, temperature: float) -> float:
    """Metropolis rule on the scalarized degradation: 1 for improving or
    equal moves, exp(-delta/T) otherwise."""
    if temperature <= 0:
        raise ContractError("temperature must be positive")
    if delta <= 0:
        return 1.0
    return math.exp(-delta / temperature)


def simplex_weights(k: int, count: int) -> List[Tuple[float, ...]]:
    """`count` weight vectors spread uniformly over the k-simplex.

    Uses the coarsest lattice with at least `count` points and, when the
    lattice is larger, an evenly spaced subsequence of its lexicographic
    enumeration (the extreme weights survive the subsampling).
    """
    if count < 1:
        raise ContractError("weight count must be >= 1")
    if count == 1:
        return [tuple(1.0 / k for _ in range(k))]
    divisions = 1
    while math.comb(divisions + k - 1, k - 1) < count:
        divisions += 1
    lattice: List[Tuple[float, ...]] = []

    def compose(prefix: List[int], left: int, slots: int):
        if slots == 1:
            lattice.append(tuple((*prefix, left)))
            return
        for part in range(left + 1):
            compose(prefix + [part], left - part, slots - 1)

    compose([], divisions, k)
    points = [tuple(p / divisions for p in vec) for vec in lattice]
    if len(points) == count:
        return points
    last = len(points) - 1
    picks = [round(i * last / (count - 1)) for i in range(count)]
    return [points[i] for i in picks]


class _Chain:
    __slots__ = ("weights", "seq", "vector", "temperature", "steps",
                 "low", "high")

    def __init__(self, weights, seq, vector, temperature):
        self.weights = weights
        self.seq = seq
        self.vector = vector
        self.temperature = temperature
        self.steps = 0
        self.low = list(vector)
        self.high = list(vector)

    def observe(self, vector: Sequence[int]) -> None:
        for i, value in enumerate(vector):
            if value < self.low[i]:
                self.low[i] = value
            if value > self.high[i]:
                self.high[i] = value

    def scalarized_delta(self, vector: Sequence[int]) -> float:
        delta = 0.0
        for i, w in enumerate(self.weights):
            spread = self.high[i] - self.low[i]
            delta += w * (vector[i] - self.vector[i]) / (spread if spread > 0 else 1)
        return delta


def mosa_run(inst: Instance, spec: ObjectiveSpec, config: SolverConfig,
             evaluator: Optional[Evaluator] = None) -> Archive:
    if config.budget < config.weight_count:
        raise ContractError("budget must cover one evaluation per weight vector")
    ev = evaluator if evaluator is not None else Evaluator(
        inst, spec, config.budget, Archive(config.archive_capacity))
    rng = as_rng(config.rng_seed)
    chains: List[_Chain] = []
    try:
        for weights in simplex_weights(spec.k, config.weight_count):
            seq = random_sequence(inst, rng)
            vector, _ = ev.evaluate_sequence(seq)
            chains.append(_Chain(weights, seq, vector,
                                 config.initial_temperature))
        while True:
            for chain in chains:
                candidate = mutate(chain.seq, config.mutation_kind, rng)
                vector, _ = ev.evaluate_sequence(candidate)
                chain.observe(vector)
                delta = chain.scalarized_delta(vector)
                prob = mosa_accept_probability(delta, chain.temperature)
                if prob >= 1.0 or rng.random() < prob:
                    chain.seq = candidate
                    chain.vector = vector
                chain.steps += 1
                if chain.steps % config.chain_length == 0:
                    chain.temperature *= config.cooling_factor
    except BudgetExhausted:
        pass
    return ev.archive

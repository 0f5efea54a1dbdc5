"""Elitist generational evolutionary algorithm with rank-based tournaments."""
from __future__ import annotations

from typing import List, Optional, Tuple

from ..model import (Instance, ObjectiveSpec, ObjectiveVector, OperationSequence,
                     as_rng, random_sequence)
from ..pareto import Archive
from .config import SolverConfig
from .engine import BudgetExhausted, Evaluator
from .operators import crossover, mutate, pareto_rank

Individual = Tuple[OperationSequence, ObjectiveVector]


def _tournament(ranks: List[int], rng) -> int:
    """Binary tournament on rank; rank ties resolved uniformly."""
    i = rng.randrange(len(ranks))
    j = rng.randrange(len(ranks))
    if ranks[i] < ranks[j]:
        return i
    if ranks[j] < ranks[i]:
        return j
    return i if rng.random() < 0.5 else j


def moea_run(inst: Instance, spec: ObjectiveSpec, config: SolverConfig,
             evaluator: Optional[Evaluator] = None) -> Archive:
    ev = evaluator if evaluator is not None else Evaluator(
        inst, spec, config.budget, Archive(config.archive_capacity))
    rng = as_rng(config.rng_seed)
    mu = config.population_size
    population: List[Individual] = []
    try:
        for _ in range(mu):
            seq = random_sequence(inst, rng)
            vector, _ = ev.evaluate_sequence(seq)
            population.append((seq, vector))
        while True:
            ranks = pareto_rank([vec for _, vec in population])
            offspring: List[Individual] = []
            for _ in range(mu):
                a = _tournament(ranks, rng)
                b = _tournament(ranks, rng)
                if rng.random() < config.crossover_probability:
                    child = crossover(population[a][0], population[b][0],
                                      config.crossover_kind, rng)
                else:
                    child = population[a][0]
                if rng.random() < config.mutation_probability:
                    child = mutate(child, config.mutation_kind, rng)
                vector, _ = ev.evaluate_sequence(child)
                offspring.append((child, vector))
            population = offspring
            elite_count = min(int(mu * config.elite_fraction),
                              len(ev.archive.entries))
            if elite_count > 0:
                elites = rng.sample(ev.archive.entries, elite_count)
                ranks = pareto_rank([vec for _, vec in population])
                worst_first = sorted(range(mu), key=lambda i: (-ranks[i], i))
                for slot, entry in zip(worst_first, elites):
                    population[slot] = (entry.sequence, entry.vector)
    except BudgetExhausted:
        pass
    return ev.archive

"""Multi-objective production scheduling workbench.

Approximates Pareto fronts of job-shop and flow-shop instances with four
metaheuristic families, compares approximation quality, and narrows a
front to one preferred schedule through aspiration levels.
"""

from .model import (FLOW_SHOP, JOB_SHOP, Instance, Job, ObjectiveSpec,
                    Operation, Schedule, decode_semi_active, evaluate,
                    make_job, random_sequence)
from .pareto import (Archive, InsertOutcome, archive_insert, brute_force_front,
                     coverage, dominates, nondominated_filter)
from .solvers import SolverConfig, run_solver

__version__ = "0.1.0"

__all__ = [
    "FLOW_SHOP", "JOB_SHOP", "Instance", "Job", "Operation", "ObjectiveSpec",
    "Schedule", "decode_semi_active", "evaluate", "make_job", "random_sequence",
    "Archive", "InsertOutcome", "archive_insert", "brute_force_front",
    "coverage", "dominates", "nondominated_filter",
    "SolverConfig", "run_solver", "__version__",
]

"""Stochastic global-optimization toolkit and benchmark harness.

Four evolutionary algorithms (differential evolution, the simplified
atavistic variant, and two augmented-simulated-annealing hybrids) on
four benchmark objectives, with a seeded benchmarking protocol that
reports success rates and average fitness calls over repeated runs.
"""

from .core import (Bounds, BudgetExhausted, ConfigInvalid, DegenerateCell,
                   DimensionMismatch, EvaluationBudget, Evaluator,
                   NonFiniteInput, PopulationTooSmall, Problem, RngStream,
                   RunRecord, UnknownProblem, clamp, evaluate, snap_to_grid)

__all__ = [
    "Bounds", "BudgetExhausted", "ConfigInvalid", "DegenerateCell",
    "DimensionMismatch", "EvaluationBudget", "Evaluator", "NonFiniteInput",
    "PopulationTooSmall", "Problem", "RngStream", "RunRecord",
    "UnknownProblem", "clamp", "evaluate", "snap_to_grid",
]

__version__ = "0.1.0"

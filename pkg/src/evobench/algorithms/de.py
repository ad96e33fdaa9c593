"""Differential evolution with best-individual attraction.

Offspring for slot i:  child_j = x_ij + F1 (x_pj - x_qj) + F2 (best_j - x_ij)
for coordinates j in the cross set, child_j = x_ij otherwise.  Parents
p, q are purely random (distinct from each other and from i), there is
no mutation operator, and a slot is replaced only on strict improvement,
so the generation semantics are synchronous and elitist.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (BudgetExhausted, ConfigInvalid, Evaluator,
                    EvaluationBudget, PopulationTooSmall, Problem, RngStream,
                    RunRecord, clamp)


@dataclass
class DeConfig:
    pop_size: int
    F1: float = 0.85
    F2: float = 0.85
    CR: float = 1.0

    def __post_init__(self):
        if self.pop_size < 4:
            raise ConfigInvalid("DE needs at least 4 individuals")
        if not 0.0 <= self.CR <= 1.0:
            raise ConfigInvalid("CR must lie in [0, 1]")


def _distinct_pairs(pop_size: int, rng: RngStream) -> tuple[np.ndarray, np.ndarray]:
    """Uniform parent indices p, q with p != q, p != i, q != i."""
    i = np.arange(pop_size)
    p = rng.integers(0, pop_size - 1, pop_size)
    q = rng.integers(0, pop_size - 1, pop_size)
    while True:
        bad = (p == i) | (q == i) | (p == q)
        if not bad.any():
            return p, q
        k = int(bad.sum())
        p[bad] = rng.integers(0, pop_size - 1, k)
        q[bad] = rng.integers(0, pop_size - 1, k)


def _cross_mask(shape, cr: float, rng: RngStream) -> np.ndarray:
    """Per-coordinate Bernoulli(CR) membership, forced non-empty per row."""
    mask = rng.random(shape) < cr
    empty = ~mask.any(axis=1)
    if empty.any():
        cols = rng.integers(0, shape[1] - 1, int(empty.sum()))
        mask[np.nonzero(empty)[0], cols] = True
    return mask


def de_offspring(i: int, population: np.ndarray, best: int, cfg: DeConfig,
                 bounds, rng: RngStream) -> np.ndarray:
    """Single offspring for slot i (the batched path lives in de_generation)."""
    pop_size, dim = population.shape
    if pop_size < 4:
        raise PopulationTooSmall("DE needs i, p, q and best distinct roles")
    p = q = i
    while p == i or q == i or p == q:
        p = int(rng.integers(0, pop_size - 1))
        q = int(rng.integers(0, pop_size - 1))
    mask = _cross_mask((1, dim), cfg.CR, rng)[0]
    child = population[i] + cfg.F1 * (population[p] - population[q]) \
        + cfg.F2 * (population[best] - population[i])
    child = np.where(mask, child, population[i])
    return clamp(child, bounds)


def de_generation(population: np.ndarray, values: np.ndarray, cfg: DeConfig,
                  evaluator: Evaluator, rng: RngStream) -> None:
    """One synchronous generation, replacing slots in place on improvement."""
    pop_size, dim = population.shape
    if pop_size < 4:
        raise PopulationTooSmall("DE needs i, p, q and best distinct roles")
    best = int(np.argmin(values))
    p, q = _distinct_pairs(pop_size, rng)
    mask = _cross_mask((pop_size, dim), cfg.CR, rng)
    children = population + cfg.F1 * (population[p] - population[q]) \
        + cfg.F2 * (population[best] - population)
    children = np.where(mask, children, population)
    children = clamp(children, evaluator.problem.bounds)
    child_values = evaluator.eval_many(children)
    improved = child_values < values
    population[improved] = children[improved]
    values[improved] = child_values[improved]


def de_run(problem: Problem, cfg: DeConfig, budget: EvaluationBudget,
           rng: RngStream) -> RunRecord:
    evaluator = Evaluator(problem, budget)
    b = problem.bounds
    population = rng.uniform(b.lower, b.upper, (cfg.pop_size, problem.dimension))
    try:
        values = evaluator.eval_many(population)
        while not evaluator.succeeded:
            de_generation(population, values, cfg, evaluator, rng)
    except BudgetExhausted:
        pass
    return evaluator.record(rng.seed)

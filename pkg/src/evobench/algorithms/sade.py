"""Simplified atavistic differential evolution.

Each generation doubles the population: some new chromosomes come from
mutation (a convex step toward a random point, weight MR) and local
mutation (small per-coordinate perturbation), the rest from the
simplified differential operator x_p + CR (x_q - x_r).  A one-pass
random-pair tournament then shrinks the doubled population back to size,
which can never discard the global best.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (Bounds, BudgetExhausted, ConfigInvalid, Evaluator,
                    EvaluationBudget, PopulationTooSmall, Problem, RngStream,
                    RunRecord, clamp)

DEFAULT_LOCAL_RANGE_FRACTION = 0.0025


@dataclass
class SadeConfig:
    pop_size: int
    CR: float
    radioactivity: float
    MR: float = 0.5
    # Half-width of the local mutation, as a fraction of each box width.
    local_range_fraction: float = DEFAULT_LOCAL_RANGE_FRACTION

    def __post_init__(self):
        if self.pop_size < 3:
            raise ConfigInvalid("SADE needs three distinct parents")
        if not 0.0 <= self.radioactivity <= 1.0:
            raise ConfigInvalid("radioactivity must lie in [0, 1]")


def sade_differential(p: np.ndarray, q: np.ndarray, r: np.ndarray,
                      cr: float, bounds: Bounds) -> np.ndarray:
    return clamp(p + cr * (q - r), bounds)


def sade_mutate(x: np.ndarray, mr: float, bounds: Bounds,
                rng: RngStream) -> np.ndarray:
    rp = rng.uniform(bounds.lower, bounds.upper, x.shape)
    return clamp(x + mr * (rp - x), bounds)


def sade_local_mutate(x: np.ndarray, half_range: np.ndarray, bounds: Bounds,
                      rng: RngStream) -> np.ndarray:
    return clamp(x + rng.uniform(-half_range, half_range, x.shape), bounds)


def _distinct_triples(pool_size: int, count: int, rng: RngStream):
    if pool_size < 3:
        raise PopulationTooSmall("differential operator needs 3 distinct parents")
    p = rng.integers(0, pool_size - 1, count)
    q = rng.integers(0, pool_size - 1, count)
    r = rng.integers(0, pool_size - 1, count)
    while True:
        bad = (p == q) | (p == r) | (q == r)
        if not bad.any():
            return p, q, r
        k = int(bad.sum())
        q[bad] = rng.integers(0, pool_size - 1, k)
        r[bad] = rng.integers(0, pool_size - 1, k)


def sade_select(population: np.ndarray, values: np.ndarray, target_size: int,
                rng: RngStream):
    """Repeated random-pair tournaments, each rejecting the worse member.

    Pairs are redrawn from the surviving pool after every elimination, so
    a poor individual faces repeated jeopardy while the best can never be
    rejected.
    """
    if population.shape[0] != 2 * target_size:
        raise ConfigInvalid("selection expects an exactly doubled population")
    alive = np.arange(2 * target_size)
    n = alive.shape[0]
    u1 = rng.random(target_size)
    u2 = rng.random(target_size)
    for k in range(target_size):
        i = int(u1[k] * n)
        j = int(u2[k] * (n - 1))
        if j >= i:
            j += 1
        worse = i if values[alive[i]] > values[alive[j]] else j
        n -= 1
        alive[worse] = alive[n]
    idx = alive[:n]
    return population[idx], values[idx]


def sade_generation(population: np.ndarray, values: np.ndarray,
                    cfg: SadeConfig, evaluator: Evaluator, rng: RngStream):
    """Double the population, evaluate the new half, shrink by tournament."""
    bounds = evaluator.problem.bounds
    pop_size = population.shape[0]
    half_range = cfg.local_range_fraction * bounds.width
    grid = evaluator.problem.grid
    if grid is not None:
        # On grid-encoded problems a fractional half-width can fall below
        # one grid step, in which case every local mutant snaps back onto
        # its parent.  Floor it at 0.6 steps: each coordinate then has a
        # 1-in-6 chance of moving one step, so a mutant perturbs a few
        # variables instead of none (or all).
        half_range = np.maximum(half_range, 0.6 * grid)

    new_rows = []
    mutate_mask = rng.random(pop_size) < cfg.radioactivity
    local_mask = rng.random(pop_size) < cfg.radioactivity
    for i in np.nonzero(mutate_mask)[0]:
        new_rows.append(sade_mutate(population[i], cfg.MR, bounds, rng))
    for i in np.nonzero(local_mask)[0]:
        new_rows.append(sade_local_mutate(population[i], half_range, bounds, rng))
    new_rows = new_rows[:pop_size]

    n_diff = pop_size - len(new_rows)
    if n_diff:
        p, q, r = _distinct_triples(pop_size, n_diff, rng)
        diff = sade_differential(population[p], population[q], population[r],
                                 cfg.CR, bounds)
        new = np.vstack([np.asarray(new_rows), diff]) if new_rows else diff
    else:
        new = np.asarray(new_rows)

    new_values = evaluator.eval_many(new)
    doubled = np.vstack([population, new])
    doubled_values = np.concatenate([values, new_values])
    return sade_select(doubled, doubled_values, pop_size, rng)


def sade_run(problem: Problem, cfg: SadeConfig, budget: EvaluationBudget,
             rng: RngStream) -> RunRecord:
    evaluator = Evaluator(problem, budget)
    b = problem.bounds
    population = rng.uniform(b.lower, b.upper, (cfg.pop_size, problem.dimension))
    try:
        values = evaluator.eval_many(population)
        while not evaluator.succeeded:
            population, values = sade_generation(population, values, cfg,
                                                 evaluator, rng)
    except BudgetExhausted:
        pass
    return evaluator.record(rng.seed)

"""Real-coded augmented simulated annealing.

A genetic algorithm whose replacement step is the Metropolis criterion:
operators are drawn from a fixed probability table, parents come from
normalized geometric ranking, and a candidate replaces its parent only
if no near-identical individual already exists and the Metropolis test
accepts it.  Temperature cools geometrically per stage; when it falls
below T_min the worse half of the population is re-randomized and the
temperature snaps back to T_max (reannealing).

The identity tolerance is interpreted per coordinate: a fixed number of
grid steps for grid-encoded problems, otherwise a fraction of the
current population range, so duplicate detection keeps working as the
population contracts without ever blocking convergence itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core import (BudgetExhausted, ConfigInvalid, Evaluator,
                    EvaluationBudget, Problem, RngStream, RunRecord)

OPERATOR_NAMES = (
    "uniform_mutation", "boundary_mutation", "nonuniform_mutation",
    "multi_nonuniform_mutation", "simple_crossover",
    "simple_arithmetic_crossover", "whole_arithmetic_crossover",
    "heuristic_crossover",
)


@dataclass
class RasaConfig:
    pop_size: int
    q: float
    operator_probs: tuple          # 8 entries, order of OPERATOR_NAMES
    b: float
    T_frac: float
    T_frac_min: float
    T_mult: float
    success_max: int
    counter_max: int
    num_heu_max: int = 20
    precision: float | np.ndarray = 1e-4   # identity-guard tolerance

    def __post_init__(self):
        if len(self.operator_probs) != len(OPERATOR_NAMES):
            raise ConfigInvalid("need one probability per operator")
        if abs(sum(self.operator_probs) - 1.0) > 1e-9:
            raise ConfigInvalid("operator probabilities must sum to 1")
        if not 0.0 < self.q < 1.0:
            raise ConfigInvalid("q must lie in (0, 1)")
        if not 0.0 < self.T_mult < 1.0:
            raise ConfigInvalid("T_mult must lie in (0, 1)")


def rank_probabilities(q: float, pop_size: int) -> np.ndarray:
    """p_r = q' (1-q)^(r-1) over ranks r = 1..pop_size (best first)."""
    r = np.arange(pop_size)
    qn = q / (1.0 - (1.0 - q) ** pop_size)
    return qn * (1.0 - q) ** r


def geometric_rank_select(order: np.ndarray, cum_probs: np.ndarray,
                          rng: RngStream) -> int:
    """Population index of a rank drawn from the geometric distribution."""
    rank = int(np.searchsorted(cum_probs, rng.random(), side="right"))
    return int(order[min(rank, order.shape[0] - 1)])


def metropolis_replace(old_fitness: float, new_fitness: float, t: float,
                       rng: RngStream) -> bool:
    """Accept iff u(0,1) <= exp((old - new) / T); never rejects improvement."""
    if new_fitness <= old_fitness:
        return True
    return rng.random() <= math.exp(max((old_fitness - new_fitness) / t, -700.0))


def identity_guard(candidate: np.ndarray, population: np.ndarray,
                   precision) -> bool:
    """True (veto) iff some member matches within precision in max-norm."""
    if population.shape[0] == 0:
        return False
    return bool(np.any(np.all(np.abs(population - candidate) <= precision,
                              axis=1)))


# -- Michalewicz operator pool -----------------------------------------

def uniform_mutation(x, bounds, rng):
    child = x.copy()
    k = int(rng.integers(0, x.shape[0] - 1))
    child[k] = rng.uniform(bounds.lower[k], bounds.upper[k])
    return child


def boundary_mutation(x, bounds, rng):
    child = x.copy()
    k = int(rng.integers(0, x.shape[0] - 1))
    child[k] = bounds.lower[k] if rng.random() < 0.5 else bounds.upper[k]
    return child


def nonuniform_mutation(x, bounds, rng, t_ratio, b):
    child = x.copy()
    k = int(rng.integers(0, x.shape[0] - 1))
    f = rng.random() * t_ratio**b
    if rng.random() < 0.5:
        child[k] += (bounds.lower[k] - child[k]) * f
    else:
        child[k] += (bounds.upper[k] - child[k]) * f
    return child


def multi_nonuniform_mutation(x, bounds, rng, t_ratio, b):
    f = rng.random(x.shape[0]) * t_ratio**b
    toward_lower = rng.random(x.shape[0]) < 0.5
    target = np.where(toward_lower, bounds.lower, bounds.upper)
    return x + (target - x) * f


def simple_crossover(x, y, rng):
    n = x.shape[0]
    if n < 2:
        return x.copy(), y.copy()
    k = int(rng.integers(1, n - 1))
    return np.concatenate([x[:k], y[k:]]), np.concatenate([y[:k], x[k:]])


def simple_arithmetic_crossover(x, y, rng):
    c1, c2 = x.copy(), y.copy()
    k = int(rng.integers(0, x.shape[0] - 1))
    p = rng.random()
    c1[k] = p * x[k] + (1.0 - p) * y[k]
    c2[k] = p * y[k] + (1.0 - p) * x[k]
    return c1, c2


def whole_arithmetic_crossover(x, y, rng, p=None):
    if p is None:
        p = rng.random()
    return p * x + (1.0 - p) * y, p * y + (1.0 - p) * x


def heuristic_crossover(x, xj, xk, bounds, rng, num_heu_max):
    """x + p (xj - xk); retried until feasible, else x unchanged.

    Callers pass xj as the fitter of the two difference parents, which
    biases the step toward the descent direction.
    """
    diff = xj - xk
    for _ in range(num_heu_max):
        child = x + rng.random() * diff
        if np.all(child >= bounds.lower) and np.all(child <= bounds.upper):
            return child
    return x.copy()


# -- main loop ---------------------------------------------------------

def rasa_run(problem: Problem, cfg: RasaConfig, budget: EvaluationBudget,
             rng: RngStream) -> RunRecord:
    evaluator = Evaluator(problem, budget)
    bounds = problem.bounds
    pop_size = cfg.pop_size
    population = rng.uniform(bounds.lower, bounds.upper,
                             (pop_size, problem.dimension))
    try:
        values = evaluator.eval_many(population)
    except BudgetExhausted:
        return evaluator.record(rng.seed)

    f_avg = float(np.mean(np.abs(values)))
    t_max = cfg.T_frac * f_avg if f_avg > 0.0 else cfg.T_frac
    t_min = cfg.T_frac_min * f_avg if f_avg > 0.0 else cfg.T_frac_min
    t = t0 = t_max

    cum_ops = np.cumsum(cfg.operator_probs)
    cum_rank = np.cumsum(rank_probabilities(cfg.q, pop_size))
    accepted = 0
    steps = 0
    grid_precision = isinstance(cfg.precision, np.ndarray)

    def identity_tolerance():
        if grid_precision:
            return cfg.precision
        return cfg.precision * (population.max(axis=0) - population.min(axis=0))

    def select_distinct(order, count):
        picks = [geometric_rank_select(order, cum_rank, rng)]
        while len(picks) < count:
            c = geometric_rank_select(order, cum_rank, rng)
            if c not in picks:
                picks.append(c)
        return picks

    try:
        while not evaluator.succeeded:
            order = np.argsort(values, kind="stable")
            op = int(np.searchsorted(cum_ops, rng.random(), side="right"))
            op = min(op, len(OPERATOR_NAMES) - 1)
            t_ratio = t / t0

            if op == 0:
                i = geometric_rank_select(order, cum_rank, rng)
                pairs = [(i, uniform_mutation(population[i], bounds, rng))]
            elif op == 1:
                i = geometric_rank_select(order, cum_rank, rng)
                pairs = [(i, boundary_mutation(population[i], bounds, rng))]
            elif op == 2:
                i = geometric_rank_select(order, cum_rank, rng)
                pairs = [(i, nonuniform_mutation(population[i], bounds, rng,
                                                 t_ratio, cfg.b))]
            elif op == 3:
                i = geometric_rank_select(order, cum_rank, rng)
                pairs = [(i, multi_nonuniform_mutation(population[i], bounds,
                                                       rng, t_ratio, cfg.b))]
            elif op == 4:
                i, j = select_distinct(order, 2)
                c1, c2 = simple_crossover(population[i], population[j], rng)
                pairs = [(i, c1), (j, c2)]
            elif op == 5:
                i, j = select_distinct(order, 2)
                c1, c2 = simple_arithmetic_crossover(population[i],
                                                     population[j], rng)
                pairs = [(i, c1), (j, c2)]
            elif op == 6:
                i, j = select_distinct(order, 2)
                c1, c2 = whole_arithmetic_crossover(population[i],
                                                    population[j], rng)
                pairs = [(i, c1), (j, c2)]
            else:
                i, j, k = select_distinct(order, 3)
                if values[j] > values[k]:
                    j, k = k, j
                child = heuristic_crossover(population[i], population[j],
                                            population[k], bounds, rng,
                                            cfg.num_heu_max)
                pairs = [(i, child)]

            children = np.asarray([c for _, c in pairs])
            child_values = evaluator.eval_many(children)
            tolerance = identity_tolerance()
            for (slot, child), cv in zip(pairs, child_values):
                steps += 1
                if identity_guard(child, population, tolerance):
                    continue
                if metropolis_replace(float(values[slot]), float(cv), t, rng):
                    population[slot] = child
                    values[slot] = cv
                    accepted += 1

            if accepted >= cfg.success_max or steps >= cfg.counter_max:
                t *= cfg.T_mult
                accepted = 0
                steps = 0
                if t < t_min:
                    # Reannealing: keep the better half, redraw the rest.
                    order = np.argsort(values, kind="stable")
                    worse = order[pop_size // 2:]
                    fresh = rng.uniform(bounds.lower, bounds.upper,
                                        (worse.shape[0], problem.dimension))
                    fresh_values = evaluator.eval_many(fresh)
                    population[worse] = fresh
                    values[worse] = fresh_values
                    t = t_max
    except BudgetExhausted:
        pass
    return evaluator.record(rng.seed)

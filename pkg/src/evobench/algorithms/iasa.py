"""Integer augmented simulated annealing.

Variables are mapped to integers through a fixed per-variable precision
(y = trunc(x / p), x = y p).  Waves of NewSize children are built from
the old population by differential crossover (probability CrossoverProb)
or Gaussian integer mutation; each child challenges one distinct random
old individual under a logistic acceptance rule that gives an equal-
fitness child exactly a 50% chance.  Temperature decays exponentially at
a rate tied to the evaluation budget and reanneals back to T_max when it
reaches T_min.

Sign convention: the printed form of the acceptance exponent would make
improvements less likely than coin flips under minimization, so the
exponent here is (F_new - F_old) / T, which accepts a strictly better
child with probability above one half while keeping the 50% tie rule.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (Bounds, BudgetExhausted, ConfigInvalid, Evaluator,
                    EvaluationBudget, Problem, RngStream, RunRecord)


class IntegerCodec:
    """Lossless fixed-precision map between real vectors and int64 vectors."""

    def __init__(self, bounds: Bounds, precision):
        self.precision = np.broadcast_to(
            np.asarray(precision, dtype=float), (len(bounds),)).copy()
        if np.any(self.precision <= 0.0):
            raise ConfigInvalid("precision must be positive")
        self.lower = np.ceil(bounds.lower / self.precision - 1e-9).astype(np.int64)
        self.upper = np.floor(bounds.upper / self.precision + 1e-9).astype(np.int64)
        if np.any(self.lower >= self.upper):
            raise ConfigInvalid("precision too coarse for the bounds")

    def encode(self, x: np.ndarray) -> np.ndarray:
        return np.trunc(np.asarray(x, dtype=float) / self.precision).astype(np.int64)

    def decode(self, y: np.ndarray) -> np.ndarray:
        return y * self.precision

    def clip(self, y: np.ndarray) -> np.ndarray:
        return np.clip(y, self.lower, self.upper)

    def sample(self, rng: RngStream, size: int) -> np.ndarray:
        cols = [rng.integers(int(lo), int(hi), size)
                for lo, hi in zip(self.lower, self.upper)]
        return np.stack(cols, axis=1).astype(np.int64)


@dataclass
class IasaConfig:
    old_size: int
    new_size: int
    T_max: float
    T_min: float
    success_max: int
    counter_max: int
    tmin_at_calls_rate: float
    crossover_prob: float
    CR: float
    precision: float | np.ndarray = 1e-3

    def __post_init__(self):
        if not 0.0 < self.T_min < self.T_max:
            raise ConfigInvalid("need 0 < T_min < T_max")
        if not 0.0 < self.tmin_at_calls_rate <= 1.0:
            raise ConfigInvalid("TminAtCallsRate must lie in (0, 1]")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ConfigInvalid("CrossoverProb must lie in [0, 1]")


def iasa_differential_crossover(p: np.ndarray, q: np.ndarray, r: np.ndarray,
                                cr: float, rng: RngStream,
                                codec: IntegerCodec) -> np.ndarray:
    """p + u(0, CR) (q - r), one scalar u per child, rounded to integers."""
    u = rng.uniform(0.0, cr)
    child = np.rint(p + u * (q - r).astype(float)).astype(np.int64)
    return codec.clip(child)


def iasa_mutate(y: np.ndarray, partner: np.ndarray, rng: RngStream,
                codec: IntegerCodec) -> np.ndarray:
    """Per-coordinate integer Gaussian step, sigma = |y - partner|/2 + 1."""
    sigma = np.abs(y - partner).astype(float) / 2.0 + 1.0
    child = y + np.rint(rng.normal(0.0, 1.0, y.shape) * sigma).astype(np.int64)
    return codec.clip(child)


def iasa_accept(old_fitness: float, new_fitness: float, t: float,
                rng: RngStream) -> bool:
    """Logistic rule: accept iff u(0,1) <= 1 / (1 + exp((new - old)/T))."""
    z = np.clip((new_fitness - old_fitness) / t, -700.0, 700.0)
    return rng.random() <= 1.0 / (1.0 + np.exp(z))


def iasa_cool(t: float, cfg: IasaConfig, max_calls: int) -> float:
    """One exponential cooling step; reanneals to T_max at the floor."""
    t_next = t * (cfg.T_min / cfg.T_max) ** (
        cfg.counter_max / (cfg.tmin_at_calls_rate * max_calls))
    if t_next <= cfg.T_min:
        return cfg.T_max
    return t_next


def _distinct_triples(pool_size: int, count: int, rng: RngStream):
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


def _wave_parents(old_size: int, count: int, rng: RngStream) -> np.ndarray:
    """Replacement targets, without repetition until the pool is exhausted."""
    reps = -(-count // old_size)
    perm = np.concatenate([rng.permutation(old_size) for _ in range(reps)])
    return perm[:count]


def iasa_run(problem: Problem, cfg: IasaConfig, budget: EvaluationBudget,
             rng: RngStream) -> RunRecord:
    codec = IntegerCodec(problem.bounds, cfg.precision)
    evaluator = Evaluator(problem, budget)
    pop = codec.sample(rng, cfg.old_size)
    try:
        values = evaluator.eval_many(codec.decode(pop))
    except BudgetExhausted:
        return evaluator.record(rng.seed)

    t = cfg.T_max
    accepted = 0
    steps = 0
    try:
        while not evaluator.succeeded:
            use_cross = rng.random(cfg.new_size) < cfg.crossover_prob
            n_cross = int(use_cross.sum())
            n_mut = cfg.new_size - n_cross
            children = np.empty((cfg.new_size, problem.dimension),
                                dtype=np.int64)
            if n_cross:
                p, q, r = _distinct_triples(cfg.old_size, n_cross, rng)
                u = rng.uniform(0.0, cfg.CR, (n_cross, 1))
                raw = pop[p] + np.rint(u * (pop[q] - pop[r]).astype(float)
                                       ).astype(np.int64)
                children[use_cross] = codec.clip(raw)
            if n_mut:
                base = rng.integers(0, cfg.old_size - 1, n_mut)
                partner = rng.integers(0, cfg.old_size - 1, n_mut)
                sigma = np.abs(pop[base] - pop[partner]).astype(float) / 2.0 + 1.0
                step = np.rint(rng.normal(0.0, 1.0, sigma.shape) * sigma
                               ).astype(np.int64)
                children[~use_cross] = codec.clip(pop[base] + step)

            child_values = evaluator.eval_many(codec.decode(children))

            targets = _wave_parents(cfg.old_size, cfg.new_size, rng)
            z = np.clip((child_values - values[targets]) / t, -700.0, 700.0)
            accept = rng.random(cfg.new_size) <= 1.0 / (1.0 + np.exp(z))
            pop[targets[accept]] = children[accept]
            values[targets[accept]] = child_values[accept]

            accepted += int(accept.sum())
            steps += cfg.new_size
            if accepted >= cfg.success_max or steps >= cfg.counter_max:
                t = iasa_cool(t, cfg, budget.max_calls)
                accepted = 0
                steps = 0
    except BudgetExhausted:
        pass
    return evaluator.record(rng.seed)

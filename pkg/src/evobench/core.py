"""Shared abstractions: chromosomes, bounds, budgets, RNG and run records.

A chromosome is a plain 1-D float ndarray; integer-valued problems keep
exact integers in the float representation (all grids used here are
exactly representable).  All randomness flows through an explicit
:class:`RngStream` so that a (problem, config, seed) triple fully
determines a run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np


class BudgetExhausted(RuntimeError):
    """Raised when an evaluation is requested past the call cap."""


class DimensionMismatch(ValueError):
    """Chromosome length does not match the problem dimension."""


class NonFiniteInput(ValueError):
    """Objective input contains NaN or infinity."""


class DegenerateCell(ValueError):
    """Periodic cell with a non-positive side length."""


class PopulationTooSmall(ValueError):
    """Population cannot supply the distinct parents an operator needs."""


class UnknownProblem(KeyError):
    """No benchmark problem registered under the given id."""


class ConfigInvalid(ValueError):
    """Algorithm or benchmark configuration violates its invariants."""


@dataclass(frozen=True)
class Bounds:
    """Per-variable box constraints, lower[j] < upper[j]."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=float)
        hi = np.asarray(self.upper, dtype=float)
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ConfigInvalid("bounds must be two equal-length vectors")
        if not np.all(lo < hi):
            raise ConfigInvalid("every lower bound must be below its upper bound")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    def __len__(self):
        return self.lower.shape[0]

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, x: np.ndarray) -> bool:
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    @classmethod
    def cube(cls, lo: float, hi: float, dim: int) -> "Bounds":
        return cls(np.full(dim, float(lo)), np.full(dim, float(hi)))


def clamp(x: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Project onto the box; idempotent. Works on a vector or a batch."""
    return np.minimum(bounds.upper, np.maximum(bounds.lower, x))


def snap_to_grid(x: np.ndarray, steps: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Round each gene to its nearest grid multiple, then clamp."""
    return clamp(steps * np.round(x / steps), bounds)


@dataclass
class EvaluationBudget:
    """Mutable call counter with a hard cap."""

    max_calls: int
    calls_used: int = 0

    def __post_init__(self):
        if self.max_calls < 0:
            raise ConfigInvalid("max_calls must be non-negative")

    @property
    def remaining(self) -> int:
        return self.max_calls - self.calls_used

    def consume(self, n: int = 1) -> None:
        if n > self.remaining:
            raise BudgetExhausted(
                f"{self.calls_used}/{self.max_calls} calls used, requested {n} more"
            )
        self.calls_used += n


class RngStream:
    """Seeded deterministic random stream (PCG64 behind the scenes).

    Provides the three draw primitives the algorithms need: real uniform
    on a closed interval, integer uniform inclusive of both ends, and
    normal deviates.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._g = np.random.default_rng(self.seed)

    def random(self, size=None):
        return self._g.random(size)

    def uniform(self, low, high, size=None):
        return self._g.uniform(low, high, size)

    def integers(self, low, high, size=None):
        """Integer uniform on [low, high], both ends inclusive."""
        return self._g.integers(low, high, size=size, endpoint=True)

    def normal(self, loc=0.0, scale=1.0, size=None):
        return self._g.normal(loc, scale, size)

    def permutation(self, n: int):
        return self._g.permutation(n)


class Problem:
    """Benchmark objective contract: bounds, optional grid, success target.

    Subclasses implement :meth:`objective` (and usually a vectorized
    :meth:`objective_batch`).  Objectives are minimized; ``threshold`` is
    the success level (strictly below means success).
    """

    name = "problem"

    def __init__(self, dimension: int, bounds: Bounds, threshold: float,
                 grid: Optional[np.ndarray] = None):
        if dimension < 1:
            raise ConfigInvalid("dimension must be positive")
        if len(bounds) != dimension:
            raise ConfigInvalid("bounds length must equal dimension")
        self.dimension = dimension
        self.bounds = bounds
        self.threshold = float(threshold)
        self.grid = None if grid is None else np.asarray(grid, dtype=float)

    def objective(self, x: np.ndarray) -> float:
        raise NotImplementedError

    def objective_batch(self, X: np.ndarray) -> np.ndarray:
        return np.array([self.objective(row) for row in X], dtype=float)

    def prepare(self, x: np.ndarray) -> np.ndarray:
        """Snap grid-encoded genes and clamp to the box (batch friendly)."""
        if self.grid is not None:
            return snap_to_grid(x, self.grid, self.bounds)
        return clamp(x, self.bounds)

    def is_success(self, value: float) -> bool:
        return value < self.threshold


def evaluate(problem: Problem, x: np.ndarray, budget: EvaluationBudget) -> float:
    """Evaluate one chromosome, charging exactly one budget call."""
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.dimension,):
        raise DimensionMismatch(
            f"chromosome length {x.shape} != dimension {problem.dimension}"
        )
    budget.consume(1)
    return float(problem.objective(problem.prepare(x)))


@dataclass
class RunRecord:
    """Outcome of one seeded optimization trial."""

    seed: int
    success: bool
    calls_at_success: Optional[int]
    best_value: float
    best_chromosome: np.ndarray
    calls_used: int


class Evaluator:
    """Counting wrapper that tracks best-so-far and first-success call.

    Owns the budget arithmetic for whole batches: if a batch does not fit
    in the remaining budget, the feasible prefix is still evaluated and
    recorded before :class:`BudgetExhausted` is raised, so the final
    RunRecord reflects every objective invocation.
    """

    def __init__(self, problem: Problem, budget: EvaluationBudget):
        self.problem = problem
        self.budget = budget
        self.best_value = np.inf
        self.best_x: Optional[np.ndarray] = None
        self.calls_at_success: Optional[int] = None

    @property
    def succeeded(self) -> bool:
        return self.calls_at_success is not None

    def _track(self, X: np.ndarray, values: np.ndarray, base_calls: int) -> None:
        if self.calls_at_success is None:
            hits = np.nonzero(values < self.problem.threshold)[0]
            if hits.size:
                self.calls_at_success = base_calls + int(hits[0]) + 1
        i = int(np.argmin(values))
        if values[i] < self.best_value:
            self.best_value = float(values[i])
            self.best_x = X[i].copy()

    def eval_many(self, X: np.ndarray) -> np.ndarray:
        """Evaluate a batch of rows; raises once the cap is hit."""
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.problem.dimension:
            raise DimensionMismatch(
                f"batch shape {X.shape} != (*, {self.problem.dimension})"
            )
        n = X.shape[0]
        avail = self.budget.remaining
        if avail <= 0:
            raise BudgetExhausted("no evaluations left")
        truncated = n > avail
        if truncated:
            X = X[:avail]
            n = avail
        base = self.budget.calls_used
        prepared = self.problem.prepare(X)
        values = self.problem.objective_batch(prepared)
        self.budget.consume(n)
        self._track(prepared, values, base)
        if truncated:
            raise BudgetExhausted("budget exhausted mid-batch")
        return values

    def eval_one(self, x: np.ndarray) -> float:
        return float(self.eval_many(np.asarray(x, dtype=float)[None, :])[0])

    def record(self, seed: int) -> RunRecord:
        best_x = self.best_x if self.best_x is not None \
            else np.full(self.problem.dimension, np.nan)
        return RunRecord(
            seed=seed,
            success=self.succeeded,
            calls_at_success=self.calls_at_success,
            best_value=self.best_value,
            best_chromosome=best_x,
            calls_used=self.budget.calls_used,
        )

"""Single-peak arctan test function on a box, with a known maximum.

f(x) = y0 * (pi/2 - arctan(||x - x0|| / r0)) attains its maximum
y0*pi/2 exactly at x0.  The solver-facing objective is the gap to that
maximum, g(x) = y0 * arctan(||x - x0|| / r0) >= 0, so minimization and
the success test (gap below 1e-3) share one convention.
"""

from __future__ import annotations

import numpy as np

from ..core import Bounds, Problem, RngStream

VARIABLE_BOUND = 400.0
PEAK_HEIGHT_RANGE = (0.0, 50.0)
DEFAULT_THRESHOLD = 1e-3


class Type0Problem(Problem):
    name = "type0"

    def __init__(self, x0: np.ndarray, y0: float, r0: float = 1.0,
                 threshold: float = DEFAULT_THRESHOLD):
        x0 = np.asarray(x0, dtype=float)
        dim = x0.shape[0]
        super().__init__(dim, Bounds.cube(-VARIABLE_BOUND, VARIABLE_BOUND, dim),
                         threshold)
        self.x0 = x0
        self.y0 = float(y0)
        self.r0 = float(r0)

    def value(self, x: np.ndarray) -> float:
        """The raw (maximized) function value."""
        d = np.linalg.norm(np.asarray(x, dtype=float) - self.x0)
        return self.y0 * (np.pi / 2.0 - np.arctan(d / self.r0))

    @property
    def peak_value(self) -> float:
        return self.y0 * np.pi / 2.0

    def objective_batch(self, X: np.ndarray) -> np.ndarray:
        d = np.linalg.norm(X - self.x0, axis=1)
        return self.y0 * np.arctan(d / self.r0)

    def objective(self, x: np.ndarray) -> float:
        d = np.linalg.norm(np.asarray(x, dtype=float) - self.x0)
        return float(self.y0 * np.arctan(d / self.r0))


def type0_random_instance(dim: int, rng: RngStream, r0: float = 1.0) -> Type0Problem:
    """Fresh instance: peak position uniform in the box, height in 0..50."""
    x0 = rng.uniform(-VARIABLE_BOUND, VARIABLE_BOUND, dim)
    y0 = rng.uniform(*PEAK_HEIGHT_RANGE)
    return Type0Problem(x0, y0, r0)

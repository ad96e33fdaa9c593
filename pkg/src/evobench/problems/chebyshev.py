"""Chebyshev polynomial fitting objective (degree 8 by default).

Find coefficients a_0..a_n of f(x) = sum a_i x^i such that |f| <= 1 on
[-1, 1] while the graph rises at least as steeply as the degree-n
Chebyshev polynomial on the flanks [-1.2, -1] and [1, 1.2].  The
objective is the total violated area:

* interior: integral of max(0, |f(x)| - 1) over [-1, 1];
* flanks: integral of max(0, T_n(x) - f(x)) over each flank, where T_n
  is the Chebyshev polynomial of the first kind.

The flank boundary is the T_n curve itself (equivalently anchored at the
endpoint values T_n(+-1.2)), so T_n scores exactly zero.  Integration is
composite trapezoid on a fixed uniform grid per interval.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import chebyshev as ncheb

from ..core import Bounds, NonFiniteInput, Problem

COEFF_BOUND = 512.0
DEFAULT_GRID_POINTS = 1000


def chebyshev_nodes(degree: int, grid_points: int):
    """Sample points and trapezoid weights for the three checked intervals."""
    xs_in = np.linspace(-1.0, 1.0, grid_points)
    xs_lo = np.linspace(-1.2, -1.0, grid_points)
    xs_hi = np.linspace(1.0, 1.2, grid_points)

    def trap_weights(xs):
        w = np.full(xs.shape, xs[1] - xs[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    return (xs_in, trap_weights(xs_in)), (xs_lo, trap_weights(xs_lo)), \
        (xs_hi, trap_weights(xs_hi))


class ChebyshevProblem(Problem):
    name = "chebyshev"

    def __init__(self, degree: int = 8, grid_points: int = DEFAULT_GRID_POINTS,
                 threshold: float = 1e-5):
        dim = degree + 1
        super().__init__(dim, Bounds.cube(-COEFF_BOUND, COEFF_BOUND, dim), threshold)
        self.degree = degree
        self.grid_points = grid_points

        (xs_in, w_in), (xs_lo, w_lo), (xs_hi, w_hi) = \
            chebyshev_nodes(degree, grid_points)
        powers = np.arange(dim)
        # Vandermonde matrices so a whole population evaluates as one matmul.
        self._v_in = xs_in[:, None] ** powers
        self._v_lo = xs_lo[:, None] ** powers
        self._v_hi = xs_hi[:, None] ** powers
        self._w_in = w_in
        self._w_lo = w_lo
        self._w_hi = w_hi
        tn = np.zeros(dim)
        tn[degree] = 1.0
        self._tn_lo = ncheb.chebval(xs_lo, tn)
        self._tn_hi = ncheb.chebval(xs_hi, tn)

    @property
    def reference_coefficients(self) -> np.ndarray:
        """Power-basis coefficients of T_n (the known optimum)."""
        tn = np.zeros(self.dimension)
        tn[self.degree] = 1.0
        return ncheb.cheb2poly(tn)

    def objective_batch(self, A: np.ndarray) -> np.ndarray:
        if not np.all(np.isfinite(A)):
            raise NonFiniteInput("coefficients must be finite")
        f_in = self._v_in @ A.T
        exceed = self._w_in @ np.maximum(0.0, np.abs(f_in) - 1.0)
        f_lo = self._v_lo @ A.T
        f_hi = self._v_hi @ A.T
        deficit = self._w_lo @ np.maximum(0.0, self._tn_lo[:, None] - f_lo) \
            + self._w_hi @ np.maximum(0.0, self._tn_hi[:, None] - f_hi)
        return exceed + deficit

    def objective(self, a: np.ndarray) -> float:
        return float(self.objective_batch(np.asarray(a, dtype=float)[None, :])[0])

"""Periodic unit cell reconstruction via Ripley's K-function matching.

The descriptor K(r) = (A / N^2) * sum_k I_k(r) counts, for each particle
k, the other particles within periodic (nearest-image) distance r of it.
The objective compares the candidate cell against a reference curve K0:

    F = sum_i ((K0(r_i) - K(r_i)) / (pi r_i^2))^2

The reference configuration ships as a small text file (line 1:
``N H1 H2``, then N ``x y`` lines); K0 is derived from it at load time,
so the optimum is exactly zero by construction.
"""

from __future__ import annotations

from importlib import resources

import numpy as np

from ..core import Bounds, DegenerateCell, Problem

DEFAULT_RADII_COUNT = 10
DEFAULT_THRESHOLD = 6e-5
_REFERENCE_RESOURCE = "puc_reference.txt"


def _min_image_sq(points: np.ndarray, cell) -> np.ndarray:
    """Squared nearest-image pair distances for (..., N, 2) point sets."""
    h1, h2 = cell
    dx = np.abs(points[..., :, None, 0] - points[..., None, :, 0])
    dy = np.abs(points[..., :, None, 1] - points[..., None, :, 1])
    dx = np.minimum(dx, h1 - dx)
    dy = np.minimum(dy, h2 - dy)
    return dx * dx + dy * dy


def ripley_k(points: np.ndarray, cell, radii: np.ndarray) -> np.ndarray:
    """K(r_i) for one configuration of shape (N, 2)."""
    return ripley_k_batch(np.asarray(points, dtype=float)[None, ...], cell,
                          radii)[0]


def ripley_k_batch(points: np.ndarray, cell, radii: np.ndarray) -> np.ndarray:
    """K(r_i) for a batch of configurations of shape (B, N, 2)."""
    h1, h2 = float(cell[0]), float(cell[1])
    if h1 <= 0.0 or h2 <= 0.0:
        raise DegenerateCell(f"cell sides must be positive, got {cell}")
    pts = np.asarray(points, dtype=float)
    n = pts.shape[-2]
    d2 = _min_image_sq(pts, (h1, h2))
    # Self-pairs sit at distance 0; push them past every radius.
    idx = np.arange(n)
    d2[..., idx, idx] = np.inf
    radii = np.asarray(radii, dtype=float)
    counts = (d2[..., None] <= radii**2).sum(axis=(-3, -2))
    return (h1 * h2) / n**2 * counts


def load_reference(text: str):
    """Parse the reference-configuration file format."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n, h1, h2 = lines[0].split()
    n = int(n)
    pts = np.array([[float(v) for v in ln.split()] for ln in lines[1:1 + n]])
    if pts.shape != (n, 2):
        raise ValueError(f"expected {n} coordinate pairs, got {pts.shape}")
    return float(h1), float(h2), pts


def _default_reference_text() -> str:
    return (resources.files("evobench.problems") / "data"
            / _REFERENCE_RESOURCE).read_text()


class PucProblem(Problem):
    name = "puc"

    def __init__(self, reference_text: str | None = None,
                 radii_count: int = DEFAULT_RADII_COUNT,
                 threshold: float = DEFAULT_THRESHOLD):
        if reference_text is None:
            reference_text = _default_reference_text()
        h1, h2, ref = load_reference(reference_text)
        self.h1, self.h2 = h1, h2
        self.fiber_count = ref.shape[0]
        self.reference_points = ref
        # Uniform radii in (0, H1/2]; periodic distances are capped there.
        self.radii = h1 / 2.0 * np.arange(1, radii_count + 1) / radii_count
        self.k0 = ripley_k(ref, (h1, h2), self.radii)
        dim = 2 * self.fiber_count
        lo = np.zeros(dim)
        hi = np.empty(dim)
        hi[0::2] = h1
        hi[1::2] = h2
        super().__init__(dim, Bounds(lo, hi), threshold)
        self._norm = np.pi * self.radii**2

    def objective_batch(self, X: np.ndarray) -> np.ndarray:
        pts = X.reshape(X.shape[0], self.fiber_count, 2)
        k = ripley_k_batch(pts, (self.h1, self.h2), self.radii)
        return np.sum(((self.k0 - k) / self._norm) ** 2, axis=1)

    def objective(self, x: np.ndarray) -> float:
        return float(self.objective_batch(np.asarray(x, dtype=float)[None, :])[0])


def puc_objective(x: np.ndarray, problem: PucProblem) -> float:
    return problem.objective(x)

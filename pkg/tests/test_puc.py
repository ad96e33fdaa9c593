"""Ripley K-function and unit-cell matching objective."""

import numpy as np
import pytest

from evobench.core import DegenerateCell, RngStream
from evobench.problems import PucProblem, puc_objective, ripley_k
from evobench.problems.puc import load_reference


def brute_force_k(points, cell, radii):
    """Independent oracle: enumerate all 9 periodic images per pair."""
    h1, h2 = cell
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    counts = np.zeros(len(radii), dtype=int)
    for k in range(n):
        for l in range(n):
            if k == l:
                continue
            best = np.inf
            for ix in (-1, 0, 1):
                for iy in (-1, 0, 1):
                    dx = pts[l, 0] - pts[k, 0] + ix * h1
                    dy = pts[l, 1] - pts[k, 1] + iy * h2
                    best = min(best, np.hypot(dx, dy))
            counts += best <= np.asarray(radii)
    return (h1 * h2) / n**2 * counts


class TestRipleyK:
    RADII = np.linspace(0.5, 5.0, 10)

    def test_single_point_is_zero(self):
        k = ripley_k(np.array([[2.0, 3.0]]), (10.0, 10.0), self.RADII)
        assert np.all(k == 0.0)

    def test_two_points_step_function(self):
        pts = np.array([[1.0, 1.0], [4.0, 1.0]])  # periodic distance 3
        k = ripley_k(pts, (10.0, 10.0), self.RADII)
        expected = np.where(self.RADII >= 3.0, 100.0 / 2.0, 0.0)
        assert np.array_equal(k, expected)

    def test_matches_brute_force_images(self):
        rng = RngStream(17)
        for _ in range(10):
            pts = rng.uniform(0.0, 25.8, (10, 2))
            radii = 25.8 / 2 * np.arange(1, 11) / 10
            ours = ripley_k(pts, (25.8, 25.8), radii)
            oracle = brute_force_k(pts, (25.8, 25.8), radii)
            assert np.array_equal(ours, oracle)

    def test_monotone_in_radius(self):
        pts = RngStream(3).uniform(0.0, 10.0, (8, 2))
        k = ripley_k(pts, (10.0, 10.0), self.RADII)
        assert np.all(np.diff(k) >= 0.0)

    def test_translation_invariant(self):
        pts = RngStream(5).uniform(0.0, 10.0, (6, 2))
        shifted = (pts + np.array([3.7, 8.1])) % 10.0
        k1 = ripley_k(pts, (10.0, 10.0), self.RADII)
        k2 = ripley_k(shifted, (10.0, 10.0), self.RADII)
        assert np.allclose(k1, k2)

    def test_degenerate_cell(self):
        with pytest.raises(DegenerateCell):
            ripley_k(np.zeros((2, 2)), (0.0, 10.0), self.RADII)


class TestPucObjective:
    def test_reference_configuration_scores_zero(self):
        prob = PucProblem()
        assert prob.objective(prob.reference_points.ravel()) == 0.0

    def test_k_zero_candidate_reduces_to_formula(self):
        # Reference pair is distant (K0 = 0); candidate pair is close.
        text = "2 10 10\n1 1\n6 6"
        prob = PucProblem(reference_text=text)
        assert np.all(prob.k0 == 0.0)
        candidate = np.array([1.0, 1.0, 1.2, 1.0])   # distance 0.2
        k = np.where(prob.radii >= 0.2, 50.0, 0.0)
        expected = np.sum((k / (np.pi * prob.radii**2)) ** 2)
        assert prob.objective(candidate) == pytest.approx(expected)

    def test_two_particle_toy_hand_counted(self):
        # Cell 10x10, reference pair at periodic distance 2, three radii
        # 5/3, 10/3, 5: K0 = (0, 50, 50).
        prob = PucProblem(reference_text="2 10 10\n0 0\n0 2", radii_count=3)
        assert np.allclose(prob.k0, [0.0, 50.0, 50.0])
        # Candidate at periodic distance 4: K = (0, 0, 50).
        value = puc_objective(np.array([0.0, 0.0, 0.0, 4.0]), prob)
        r2 = 10.0 / 2 * 2 / 3
        assert value == pytest.approx((50.0 / (np.pi * r2**2)) ** 2)

    def test_objective_nonnegative_and_zero_only_on_match(self):
        prob = PucProblem()
        rng = RngStream(9)
        batch = rng.uniform(0.0, 25.8, (20, prob.dimension))
        values = prob.objective_batch(batch)
        assert np.all(values >= 0.0)


class TestReferenceFile:
    def test_roundtrip_parse(self):
        h1, h2, pts = load_reference("2 10 12\n1 2\n3 4\n")
        assert (h1, h2) == (10.0, 12.0)
        assert np.array_equal(pts, [[1.0, 2.0], [3.0, 4.0]])

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            load_reference("3 10 10\n1 2\n3 4\n")

    def test_shipped_reference_shape(self):
        prob = PucProblem()
        assert prob.fiber_count == 10
        assert prob.h1 == prob.h2 == 25.8
        assert prob.dimension == 20
        assert len(prob.radii) == 10
        assert prob.radii[-1] == pytest.approx(12.9)

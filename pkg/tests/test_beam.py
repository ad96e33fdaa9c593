"""Beam layout objective: cost arithmetic, penalty branches, monotonicity."""

import numpy as np
import pytest

from evobench.problems import BeamProblem, beam_objective
from evobench.problems.beam import (BAR_DIAMETERS, GRID_STEPS, LOWER,
                                    STIRRUP_DIAMETERS, UPPER)

# A feasible near-optimal layout (penalty-free by construction below).
GOOD = np.array([0.15, 0.4, 8, 5, 2, 0, 2, 0, 2, 0,
                 0, 0.1, 0.4, 0.1, 0.5, 2.5, 2.5, 0.5])


@pytest.fixture(scope="module")
def problem():
    return BeamProblem()


class TestCost:
    def test_feasible_design_is_pure_cost(self, problem):
        X = problem.prepare(GOOD.copy())[None, :]
        assert problem.penalties(X)[0] == 0.0
        assert problem.objective_batch(X)[0] == problem.cost(X)[0]

    def test_hand_computed_minimal_section(self, problem):
        # b = h = 0.15, no longitudinal bars, thinnest stirrups at 0.4 m,
        # four 1.5 m segments.
        design = np.array([0.15, 0.15, 0, 0, 0, 0, 0, 0, 0, 0,
                           0, 0.4, 0.4, 0.4, 1.5, 1.5, 1.5, 1.5])
        X = problem.prepare(design)[None, :]
        # Part lengths 1.5 / 3.0 / 1.5 -> stirrup counts 4 + 8 + 4.
        stirrup_len = 2.0 * ((0.15 - 0.07) + (0.15 - 0.07))
        stirrup_vol = 16 * stirrup_len * np.pi / 4.0 * 0.006**2
        concrete_vol = 0.15 * 0.15 * 6.0 - stirrup_vol
        expected = concrete_vol * 2500.0 + stirrup_vol * 7850.0 * 10.0
        assert problem.cost(X)[0] == pytest.approx(expected)

    def test_cost_nonnegative(self, problem):
        rng = np.random.default_rng(0)
        raw = rng.uniform(LOWER, UPPER, (30, 18))
        X = np.array([problem.prepare(x) for x in raw])
        assert np.all(problem.cost(X) >= 0.0)


class TestPenalties:
    def test_doubled_demand_ratio_quadratic(self, problem):
        # Stretch one segment by one grid step: the length-sum deviation
        # becomes 0.25 m = 2x the 0.125 m tolerance -> penalty w * 2^2
        # with the length-sum weight w = 80.
        bad = GOOD.copy()
        bad[17] += 0.25
        X_good = problem.prepare(GOOD.copy())[None, :]
        X_bad = problem.prepare(bad)[None, :]
        delta = problem.penalties(X_bad)[0] - problem.penalties(X_good)[0]
        assert delta == pytest.approx(problem.model.weights[9] * 4.0)
        assert problem.model.weights[9] == 80.0

    def test_never_rejects(self, problem):
        rng = np.random.default_rng(1)
        raw = rng.uniform(LOWER, UPPER, (30, 18))
        X = np.array([problem.prepare(x) for x in raw])
        values = problem.objective_batch(X)
        assert np.all(np.isfinite(values))
        assert np.all(problem.penalties(X) >= 0.0)

    def test_zero_reinforcement_is_penalized(self, problem):
        design = np.array([0.15, 0.15, 0, 0, 0, 0, 0, 0, 0, 0,
                           0, 0.4, 0.4, 0.4, 1.5, 1.5, 1.5, 1.5])
        X = problem.prepare(design)[None, :]
        assert problem.penalties(X)[0] > 0.0


class TestMonotonicity:
    def test_more_steel_costs_more_when_feasible(self, problem):
        heavier = GOOD.copy()
        heavier[5] += 1.0   # one extra top bar mid-span; still fits width
        X0 = problem.prepare(GOOD.copy())[None, :]
        X1 = problem.prepare(heavier)[None, :]
        assert problem.penalties(X1)[0] == 0.0
        assert problem.objective_batch(X1)[0] > problem.objective_batch(X0)[0]


class TestEncoding:
    def test_catalogs(self):
        assert len(BAR_DIAMETERS) == 16
        assert len(STIRRUP_DIAMETERS) == 4

    def test_grid_snap_inside_evaluate(self, problem):
        # Off-grid input snaps before costing: same value as snapped input.
        off = GOOD + 0.004
        assert beam_objective(off, problem) == pytest.approx(
            beam_objective(problem.prepare(off.copy()), problem))

    def test_dimension_and_grid(self, problem):
        assert problem.dimension == 18
        assert np.array_equal(problem.grid, GRID_STEPS)

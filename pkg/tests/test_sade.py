"""SADE operators: differential step, mutations, tournament selection."""

import numpy as np
import pytest

from evobench.algorithms.sade import (SadeConfig, sade_differential,
                                      sade_generation, sade_local_mutate,
                                      sade_mutate, sade_run, sade_select)
from evobench.core import (Bounds, ConfigInvalid, EvaluationBudget, Evaluator,
                           RngStream)
from evobench.problems import Type0Problem

BOUNDS2 = Bounds.cube(-10.0, 10.0, 2)


class TestDifferential:
    def test_cr_zero_copies_p(self):
        p, q, r = np.array([1.0, 2.0]), np.array([3.0, 4.0]), np.array([5.0, 6.0])
        assert np.array_equal(sade_differential(p, q, r, 0.0, BOUNDS2), p)

    def test_equal_qr_copies_p(self):
        p, q = np.array([1.0, 2.0]), np.array([3.0, 4.0])
        assert np.array_equal(sade_differential(p, q, q, 0.7, BOUNDS2), p)

    def test_direct_arithmetic(self):
        child = sade_differential(np.array([0.0, 0.0]), np.array([1.0, 2.0]),
                                  np.array([0.0, 1.0]), 0.3, BOUNDS2)
        assert np.allclose(child, [0.3, 0.3])

    def test_swap_symmetry_with_negated_cr(self):
        rng = np.random.default_rng(1)
        p, q, r = rng.uniform(-5, 5, (3, 2))
        assert np.allclose(sade_differential(p, q, r, 0.4, BOUNDS2),
                           sade_differential(p, r, q, -0.4, BOUNDS2))


class TestMutate:
    def test_mr_zero_identity(self):
        x = np.array([1.0, -2.0])
        assert np.array_equal(sade_mutate(x, 0.0, BOUNDS2, RngStream(0)), x)

    def test_mr_one_is_random_point(self):
        x = np.array([1.0, -2.0])
        rp = sade_mutate(x, 1.0, BOUNDS2, RngStream(4))
        assert BOUNDS2.contains(rp)
        # Same stream, MR = 0.5: exact midpoint toward the same random point.
        half = sade_mutate(x, 0.5, BOUNDS2, RngStream(4))
        assert np.allclose(half, x + 0.5 * (rp - x))


class TestLocalMutate:
    def test_zero_range_identity(self):
        x = np.array([0.5, 0.5])
        out = sade_local_mutate(x, np.zeros(2), BOUNDS2, RngStream(0))
        assert np.array_equal(out, x)

    def test_bounded_perturbation(self):
        x = np.zeros(1)
        bounds = Bounds.cube(-1.0, 1.0, 1)
        rng = RngStream(2)
        for _ in range(10_000):
            out = sade_local_mutate(x, np.array([0.1]), bounds, rng)
            assert abs(out[0]) <= 0.1

    def test_all_coordinates_move(self):
        x = np.zeros(5)
        out = sade_local_mutate(x, np.full(5, 0.1), BOUNDS2.cube(-1, 1, 5),
                                RngStream(3))
        assert np.all(out != 0.0)


class TestSelect:
    def test_size_contract_with_equal_fitness(self):
        pop = np.arange(12.0).reshape(6, 2)
        values = np.zeros(6)
        out, out_values = sade_select(pop, values, 3, RngStream(0))
        assert out.shape == (3, 2)
        assert out_values.shape == (3,)

    def test_best_always_survives(self):
        pop = np.arange(6.0)[:, None]
        values = np.array([3.0, 0.5, 4.0, 2.0, 5.0, 1.0])
        for seed in range(1000):
            _, out_values = sade_select(pop, values, 3, RngStream(seed))
            assert 0.5 in out_values

    def test_worst_sometimes_eliminated(self):
        pop = np.arange(6.0)[:, None]
        values = np.array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
        survived = sum(
            6.0 in sade_select(pop, values, 3, RngStream(seed))[1]
            for seed in range(1000))
        assert survived < 900

    def test_rejects_wrong_size(self):
        with pytest.raises(ConfigInvalid):
            sade_select(np.zeros((5, 1)), np.zeros(5), 3, RngStream(0))


class TestGeneration:
    def _setup(self, radioactivity):
        prob = Type0Problem(np.zeros(2), y0=10.0)
        cfg = SadeConfig(pop_size=8, CR=0.3, radioactivity=radioactivity)
        ev = Evaluator(prob, EvaluationBudget(100_000))
        rng = RngStream(6)
        pop = rng.uniform(-400.0, 400.0, (8, 2))
        values = ev.eval_many(pop)
        return prob, cfg, ev, rng, pop, values

    def test_exactly_pop_size_evaluations_per_generation(self):
        _, cfg, ev, rng, pop, values = self._setup(0.3)
        used = ev.budget.calls_used
        pop, values = sade_generation(pop, values, cfg, ev, rng)
        assert ev.budget.calls_used == used + 8
        assert pop.shape == (8, 2)

    def test_zero_radioactivity_runs_pure_differential(self):
        _, cfg, ev, rng, pop, values = self._setup(0.0)
        pop, values = sade_generation(pop, values, cfg, ev, rng)
        assert pop.shape == (8, 2)

    def test_monotone_best_trace(self):
        _, cfg, ev, rng, pop, values = self._setup(0.05)
        trace = [values.min()]
        for _ in range(100):
            pop, values = sade_generation(pop, values, cfg, ev, rng)
            trace.append(values.min())
        assert np.all(np.diff(trace) <= 0.0)


class TestConfigAndRun:
    def test_minimum_population(self):
        with pytest.raises(ConfigInvalid):
            SadeConfig(pop_size=2, CR=0.3, radioactivity=0.1)

    def test_radioactivity_range(self):
        with pytest.raises(ConfigInvalid):
            SadeConfig(pop_size=5, CR=0.3, radioactivity=1.5)

    def test_run_deterministic(self):
        prob = Type0Problem(np.array([5.0, -5.0]), y0=4.0)
        cfg = SadeConfig(pop_size=10, CR=0.44, radioactivity=0.05)
        r1 = sade_run(prob, cfg, EvaluationBudget(3000), RngStream(9))
        r2 = sade_run(prob, cfg, EvaluationBudget(3000), RngStream(9))
        assert r1.best_value == r2.best_value
        assert r1.calls_used == r2.calls_used

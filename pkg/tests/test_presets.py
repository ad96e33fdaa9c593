"""Preset tables: value spellings, config construction, round-trip."""

import numpy as np
import pytest

from evobench import presets
from evobench.core import ConfigInvalid, UnknownProblem
from evobench.problems.beam import GRID_STEPS


class TestResolveValue:
    def test_dim_multiplier(self):
        assert presets.resolve_value("10*dim", dim=9) == 90

    def test_pop_size_multiplier(self):
        assert presets.resolve_value("50*pop_size", pop_size=32) == 1600

    def test_percentage(self):
        assert presets.resolve_value("19%") == pytest.approx(0.19)

    def test_grid_requires_grid(self):
        with pytest.raises(ConfigInvalid):
            presets.resolve_value("grid")
        out = presets.resolve_value("grid", grid=GRID_STEPS)
        assert np.array_equal(out, GRID_STEPS)

    def test_numeric_passthrough(self):
        assert presets.resolve_value(0.85) == 0.85
        assert presets.resolve_value("1000") == 1000

    def test_garbage_rejected(self):
        with pytest.raises(ConfigInvalid):
            presets.resolve_value("ten*dim", dim=4)


class TestAlgorithmConfig:
    def test_de_puc_column(self):
        cfg = presets.algorithm_config("de", "puc", 20)
        assert (cfg.pop_size, cfg.F1, cfg.F2, cfg.CR) == (200, 0.75, 0.75, 1.0)

    def test_de_beam_column(self):
        cfg = presets.algorithm_config("de", "beam", 18, grid=GRID_STEPS)
        assert (cfg.pop_size, cfg.CR) == (198, 0.1)

    def test_sade_type0_population(self):
        cfg = presets.algorithm_config("sade", "type0", 10)
        assert cfg.pop_size == 250
        assert (cfg.CR, cfg.radioactivity, cfg.MR) == (0.1, 0.05, 0.5)

    def test_rasa_counters_scale_with_population(self):
        cfg = presets.algorithm_config("rasa", "chebyshev", 9)
        assert cfg.pop_size == 32
        assert cfg.success_max == 320
        assert cfg.counter_max == 1600

    def test_rasa_beam_grid_precision(self):
        cfg = presets.algorithm_config("rasa", "beam", 18, grid=GRID_STEPS)
        assert isinstance(cfg.precision, np.ndarray)
        assert np.array_equal(cfg.precision, GRID_STEPS)

    def test_iasa_chebyshev_column(self):
        cfg = presets.algorithm_config("iasa", "chebyshev", 9)
        assert (cfg.old_size, cfg.new_size) == (80, 5)
        assert cfg.tmin_at_calls_rate == pytest.approx(0.19)
        assert cfg.crossover_prob == pytest.approx(0.97)

    def test_override_applied(self):
        cfg = presets.algorithm_config("de", "chebyshev", 9,
                                       overrides={"F1": "0.5"})
        assert cfg.F1 == 0.5

    def test_unknown_override_rejected(self):
        with pytest.raises(ConfigInvalid):
            presets.algorithm_config("de", "chebyshev", 9,
                                     overrides={"mutation_rate": "0.5"})


class TestTermination:
    def test_quoted_pairs(self):
        assert presets.termination_presets("chebyshev") == (1e-5, 100_000)
        assert presets.termination_presets("puc") == (6e-5, 400_000)
        assert presets.termination_presets("type0") == (1e-3, 5_000_000)

    def test_beam_relative_target(self):
        threshold, cap = presets.termination_presets("beam")
        assert threshold == pytest.approx(
            presets.BEAM_REFERENCE_BEST * 1.005)
        assert cap == 1_000_000

    def test_unknown_problem(self):
        with pytest.raises(UnknownProblem):
            presets.termination_presets("knapsack")


class TestRoundTrip:
    def test_dump_parses_back_completely(self):
        sections = presets.load_preset_text(presets.dump_presets())
        assert set(sections) == {(a, p) for a in presets.ALGORITHMS
                                 for p in presets.PROBLEMS}

    @pytest.mark.parametrize("algorithm", presets.ALGORITHMS)
    @pytest.mark.parametrize("problem", presets.PROBLEMS)
    def test_reingested_values_build_identical_configs(self, algorithm, problem):
        grid = GRID_STEPS if problem == "beam" else None
        dim = {"chebyshev": 9, "type0": 10, "beam": 18, "puc": 20}[problem]
        sections = presets.load_preset_text(presets.dump_presets(algorithm))
        reloaded = presets.algorithm_config(
            algorithm, problem, dim, grid=grid,
            overrides=sections[(algorithm, problem)])
        original = presets.algorithm_config(algorithm, problem, dim, grid=grid)
        for name, value in vars(original).items():
            other = getattr(reloaded, name)
            if isinstance(value, np.ndarray):
                assert np.array_equal(value, other)
            else:
                assert value == other

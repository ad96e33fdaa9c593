"""Published parameter presets for every algorithm/problem pairing.

Preset values are kept in their published spelling ("10*dim", "19%",
"grid") so a dumped preset file is hand-editable and round-trips exactly
through the CLI.  ``grid`` means one grid step per variable and resolves
against the problem's grid; percentages resolve to fractions.
"""

from __future__ import annotations

import numpy as np

from .algorithms.de import DeConfig
from .algorithms.iasa import IasaConfig
from .algorithms.rasa import OPERATOR_NAMES, RasaConfig
from .algorithms.sade import SadeConfig
from .core import ConfigInvalid, UnknownProblem

PROBLEMS = ("chebyshev", "type0", "beam", "puc")
ALGORITHMS = ("de", "sade", "rasa", "iasa")

# Cost of the globally optimal beam layout, certified by exhaustive
# enumeration over the separable design structure
# (scripts/beam_reference.py regenerates and re-verifies it).  The
# benchmark success target for the beam is this value plus 0.5%.
BEAM_REFERENCE_BEST = 1107.841486776194

DEFAULT_MAX_CALLS = {
    "chebyshev": 100_000,
    "type0": 5_000_000,   # cap is ours; the published tables go up to ~4.2M
    "beam": 1_000_000,
    "puc": 400_000,
}

DEFAULT_THRESHOLDS = {
    "chebyshev": 1e-5,
    "type0": 1e-3,
    "puc": 6e-5,
}

_RASA_OTHERS = {
    "pop_size": 32, "q": 0.04,
    "p_uni_mut": 0.05, "p_bnd_mut": 0.05, "p_nun_mut": 0.05,
    "p_mnu_mut": 0.05, "p_smp_crs": 0.15, "p_sar_crs": 0.15,
    "p_war_crs": 0.15, "p_heu_crs": 0.35,
    "b": 2.0, "T_frac": 1e-10, "T_frac_min": 1e-14, "T_mult": 0.9,
    "num_success_max": "10*pop_size", "num_counter_max": "50*pop_size",
    "num_heu_max": 20, "precision": 1e-4,
}

_RASA_BEAM = {
    "pop_size": 64, "q": 0.04,
    "p_uni_mut": 0.525, "p_bnd_mut": 0.125, "p_nun_mut": 0.125,
    "p_mnu_mut": 0.125, "p_smp_crs": 0.025, "p_sar_crs": 0.025,
    "p_war_crs": 0.025, "p_heu_crs": 0.025,
    "b": 0.25, "T_frac": 1e-2, "T_frac_min": 1e-4, "T_mult": 0.9,
    "num_success_max": "10*pop_size", "num_counter_max": "50*pop_size",
    "num_heu_max": 20, "precision": "grid",
}

PRESETS = {
    "de": {
        "chebyshev": {"pop_size": "10*dim", "F1": 0.85, "F2": 0.85, "CR": 1.0},
        "type0": {"pop_size": "10*dim", "F1": 0.85, "F2": 0.85, "CR": 1.0},
        "beam": {"pop_size": "11*dim", "F1": 0.85, "F2": 0.85, "CR": 0.1},
        "puc": {"pop_size": "10*dim", "F1": 0.75, "F2": 0.75, "CR": 1.0},
    },
    "sade": {
        "chebyshev": {"pop_size": "10*dim", "CR": 0.44, "radioactivity": 0.0,
                      "MR": 0.5},
        "type0": {"pop_size": "25*dim", "CR": 0.1, "radioactivity": 0.05,
                  "MR": 0.5},
        "beam": {"pop_size": "10*dim", "CR": 0.3, "radioactivity": 0.05,
                 "MR": 0.5},
        "puc": {"pop_size": "10*dim", "CR": 0.2, "radioactivity": 0.3,
                "MR": 0.5},
    },
    "rasa": {
        "chebyshev": dict(_RASA_OTHERS),
        "type0": dict(_RASA_OTHERS),
        "beam": dict(_RASA_BEAM),
        "puc": dict(_RASA_OTHERS),
    },
    "iasa": {
        "chebyshev": {"OldSize": 80, "NewSize": 5, "T_max": 1e-5,
                      "T_min": 1e-7, "SuccessMax": 1000, "CounterMax": 5000,
                      "TminAtCallsRate": "19%", "CrossoverProb": "97%",
                      "CR": 0.5, "precision": 1e-3},
        "type0": {"OldSize": 900, "NewSize": 600, "T_max": 1e-5,
                  "T_min": 1e-10, "SuccessMax": 1000, "CounterMax": 5000,
                  "TminAtCallsRate": "100%", "CrossoverProb": "92%",
                  "CR": 0.6, "precision": 1e-5},
        "beam": {"OldSize": 180, "NewSize": 250, "T_max": 1e-4,
                 "T_min": 1e-5, "SuccessMax": 1000, "CounterMax": 5000,
                 "TminAtCallsRate": "25%", "CrossoverProb": "60%",
                 "CR": 1.3, "precision": "grid"},
        "puc": {"OldSize": 200, "NewSize": 100, "T_max": 1e-1,
                "T_min": 1e-5, "SuccessMax": 1000, "CounterMax": 5000,
                "TminAtCallsRate": "20%", "CrossoverProb": "90%",
                "CR": 1.0, "precision": 1e-3},
    },
}


def resolve_value(raw, *, dim=None, pop_size=None, grid=None):
    """Turn a preset spelling into a number (or array, for ``grid``)."""
    if isinstance(raw, (int, float)):
        return raw
    s = str(raw).strip()
    if s == "grid":
        if grid is None:
            raise ConfigInvalid("'grid' precision needs a grid-encoded problem")
        return np.asarray(grid, dtype=float)
    if s.endswith("%"):
        return float(s[:-1]) / 100.0
    for suffix, ref in (("*dim", dim), ("*pop_size", pop_size)):
        if s.endswith(suffix):
            if ref is None:
                raise ConfigInvalid(f"cannot resolve {s!r} here")
            try:
                factor = float(s[: -len(suffix)])
            except ValueError as exc:
                raise ConfigInvalid(f"unparseable preset value {raw!r}") from exc
            return int(round(factor * ref))
    try:
        f = float(s)
    except ValueError as exc:
        raise ConfigInvalid(f"unparseable preset value {raw!r}") from exc
    return int(f) if f.is_integer() and "." not in s and "e" not in s.lower() else f


def _merged(algorithm: str, problem: str, overrides=None) -> dict:
    if algorithm not in PRESETS:
        raise ConfigInvalid(f"unknown algorithm {algorithm!r}")
    if problem not in PRESETS[algorithm]:
        raise UnknownProblem(problem)
    params = dict(PRESETS[algorithm][problem])
    for key, value in (overrides or {}).items():
        if key not in params:
            raise ConfigInvalid(
                f"unknown parameter {key!r} for {algorithm}/{problem}")
        params[key] = value
    return params


def algorithm_config(algorithm: str, problem: str, dim: int, grid=None,
                     overrides=None):
    """Build the concrete config object for one algorithm/problem pair."""
    p = _merged(algorithm, problem, overrides)
    if algorithm == "de":
        return DeConfig(
            pop_size=resolve_value(p["pop_size"], dim=dim),
            F1=resolve_value(p["F1"]), F2=resolve_value(p["F2"]),
            CR=resolve_value(p["CR"]))
    if algorithm == "sade":
        return SadeConfig(
            pop_size=resolve_value(p["pop_size"], dim=dim),
            CR=resolve_value(p["CR"]),
            radioactivity=resolve_value(p["radioactivity"]),
            MR=resolve_value(p["MR"]))
    if algorithm == "rasa":
        pop = resolve_value(p["pop_size"], dim=dim)
        probs = tuple(
            resolve_value(p[k]) for k in (
                "p_uni_mut", "p_bnd_mut", "p_nun_mut", "p_mnu_mut",
                "p_smp_crs", "p_sar_crs", "p_war_crs", "p_heu_crs"))
        return RasaConfig(
            pop_size=pop, q=resolve_value(p["q"]), operator_probs=probs,
            b=resolve_value(p["b"]), T_frac=resolve_value(p["T_frac"]),
            T_frac_min=resolve_value(p["T_frac_min"]),
            T_mult=resolve_value(p["T_mult"]),
            success_max=resolve_value(p["num_success_max"], pop_size=pop),
            counter_max=resolve_value(p["num_counter_max"], pop_size=pop),
            num_heu_max=resolve_value(p["num_heu_max"]),
            precision=resolve_value(p["precision"], grid=grid))
    if algorithm == "iasa":
        return IasaConfig(
            old_size=resolve_value(p["OldSize"]),
            new_size=resolve_value(p["NewSize"]),
            T_max=resolve_value(p["T_max"]), T_min=resolve_value(p["T_min"]),
            success_max=resolve_value(p["SuccessMax"]),
            counter_max=resolve_value(p["CounterMax"]),
            tmin_at_calls_rate=resolve_value(p["TminAtCallsRate"]),
            crossover_prob=resolve_value(p["CrossoverProb"]),
            CR=resolve_value(p["CR"]),
            precision=resolve_value(p["precision"], grid=grid))
    raise ConfigInvalid(f"unknown algorithm {algorithm!r}")


def termination_presets(problem: str) -> tuple[float, int]:
    """(success threshold, evaluation cap) per benchmark problem."""
    if problem not in PROBLEMS:
        raise UnknownProblem(problem)
    if problem == "beam":
        if BEAM_REFERENCE_BEST is None:
            raise ConfigInvalid("beam reference cost not calibrated")
        return BEAM_REFERENCE_BEST * 1.005, DEFAULT_MAX_CALLS["beam"]
    return DEFAULT_THRESHOLDS[problem], DEFAULT_MAX_CALLS[problem]


def _format_value(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def dump_presets(algorithm: str | None = None) -> str:
    """Flat key-value text, one [algorithm.problem] section each."""
    algos = (algorithm,) if algorithm else ALGORITHMS
    lines = []
    for algo in algos:
        if algo not in PRESETS:
            raise ConfigInvalid(f"unknown algorithm {algo!r}")
        for problem in PROBLEMS:
            lines.append(f"[{algo}.{problem}]")
            for key, value in PRESETS[algo][problem].items():
                lines.append(f"{key} = {_format_value(value)}")
            lines.append("")
    return "\n".join(lines)


def load_preset_text(text: str) -> dict:
    """Parse dump_presets output into {(algorithm, problem): {param: raw}}."""
    sections: dict = {}
    current = None
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if s.startswith("[") and s.endswith("]"):
            name = s[1:-1]
            algo, _, problem = name.partition(".")
            if algo not in PRESETS or problem not in PROBLEMS:
                raise ConfigInvalid(f"unknown preset section {name!r}")
            current = sections.setdefault((algo, problem), {})
            continue
        if current is None or "=" not in s:
            raise ConfigInvalid(f"malformed preset line {lineno}: {line!r}")
        key, _, value = s.partition("=")
        current[key.strip()] = value.strip()
    return sections

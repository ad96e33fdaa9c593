"""Reinforced concrete beam layout: cost objective with quadratic penalties.

The design vector has 18 grid-encoded variables:

====  =======================  =====================  =======
idx   variable                 range                  step
====  =======================  =====================  =======
0     width b [m]              0.15 .. 0.45           0.025
1     height h [m]             0.15 .. 0.85           0.025
2     top bar profile          catalog index 0..15    1
3     bottom bar profile       catalog index 0..15    1
4-6   top bar count, part i    0 .. 15                1
7-9   bottom bar count, part i 0 .. 15                1
10    stirrup profile          catalog index 0..3     1
11-13 stirrup spacing [m]      0.05 .. 0.40           0.025
14-17 segment length [m]       0.50 .. 2.50           0.25
====  =======================  =====================  =======

Geometry convention: the beam span is split into three reinforcement
parts (end / mid / end).  The four length segments map onto them as
part1 = seg0, part2 = seg1 + seg2, part3 = seg3; the segment lengths
must sum to the span (enforced by penalty, never by rejection).

The structural checks are a simplified rectangular-section model with
EC2-like constants (rectangular stress block lever arm 0.9 d, design
steel strength 435 MPa, plain-concrete flexural baseline so capacities
stay positive at zero reinforcement).  They are deliberately not a code
implementation; the point is the optimization structure: cost =
V_c * P_c + W_s * P_s plus one quadratic penalty w * (demand/capacity)^2
per violated constraint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import Bounds, Problem

# Longitudinal bar catalog, diameters in meters (16 profiles).
BAR_DIAMETERS = np.array([
    0.005, 0.006, 0.008, 0.010, 0.012, 0.014, 0.016, 0.018,
    0.020, 0.022, 0.025, 0.028, 0.030, 0.032, 0.036, 0.040,
])
# Stirrup catalog (4 profiles).  Deliberately close wire gauges: at a
# near-optimal spacing the shear steel volume is almost profile
# independent, so committing to the "wrong" profile early costs little
# and is recoverable by a profile step plus one spacing step.
STIRRUP_DIAMETERS = np.array([0.006, 0.0065, 0.007, 0.0075])

# Segment lengths use a coarse 0.25 m grid (reinforcement curtailment
# points at quarter-metre increments): redistributing length between
# parts is then a handful of paired steps instead of a long staircase.
GRID_STEPS = np.array([0.025, 0.025] + [1.0] * 8 + [1.0]
                      + [0.025] * 3 + [0.25] * 4)
LOWER = np.array([0.15, 0.15] + [0.0] * 8 + [0.0]
                 + [0.05] * 3 + [0.50] * 4)
UPPER = np.array([0.45, 0.85, 15.0, 15.0] + [15.0] * 6 + [3.0]
                 + [0.40] * 3 + [2.50] * 4)


@dataclass(frozen=True)
class BeamModel:
    """Loads, prices and section constants of the simplified beam check."""

    span: float = 6.0                # m
    load: float = 30e3               # N/m uniform
    concrete_price: float = 2500.0   # CZK per m^3
    steel_price: float = 10.0        # CZK per kg
    steel_density: float = 7850.0    # kg per m^3
    f_yd: float = 435e6              # Pa, design steel strength
    f_ctd: float = 1.2e6             # Pa, concrete tension baseline
    shear_stress: float = 0.35e6     # Pa, concrete shear baseline
    elastic_modulus: float = 30e9    # Pa
    cover: float = 0.035             # m
    bar_gap: float = 0.030           # m clear spacing between bars
    deflection_ratio: float = 250.0  # limit = span / ratio
    length_tol: float = 0.125        # m, half a segment grid step
    # Hogging moments at the end parts, sagging at mid (fixed-end beam).
    moment_demand: tuple = (90e3, 45e3, 90e3)   # Nm per part
    shear_demand: tuple = (90e3, 27e3, 90e3)    # N per part
    # One weight per constraint: moments (3), shears (3), bar fit (2),
    # deflection, length sum.  Two deliberate departures from the flat
    # 100 CZK scale:
    # * bar fit is weighted 1000 so that over-stuffed bar rows are never
    #   cost competitive - at 100 CZK a mildly violating row (e.g. three
    #   bars 18% too wide) undercuts the feasible alternatives and forms
    #   a stable penalized local optimum;
    # * the length sum is weighted 80, sized so shortening the beam by
    #   one segment step (0.25 m) always costs more in penalty
    #   (80 * 2^2 = 320 CZK) than the material it saves even for the
    #   fattest section (~254 CZK/step), while random designs' length
    #   penalties stay near the cost scale instead of dwarfing it.
    # scripts/beam_reference.py re-checks both bounds exhaustively.
    weights: tuple = (100.0,) * 6 + (1000.0, 1000.0, 100.0, 80.0)


class BeamProblem(Problem):
    name = "beam"

    def __init__(self, model: BeamModel | None = None, threshold: float = np.inf):
        super().__init__(18, Bounds(LOWER.copy(), UPPER.copy()), threshold,
                         grid=GRID_STEPS.copy())
        self.model = model or BeamModel()

    # -- pieces ---------------------------------------------------------

    def _geometry(self, X):
        b, h = X[:, 0], X[:, 1]
        phi_top = BAR_DIAMETERS[X[:, 2].astype(int)]
        phi_bot = BAR_DIAMETERS[X[:, 3].astype(int)]
        n_top = X[:, 4:7]
        n_bot = X[:, 7:10]
        phi_sw = STIRRUP_DIAMETERS[X[:, 10].astype(int)]
        spacing = X[:, 11:14]
        segs = X[:, 14:18]
        part_len = np.stack(
            [segs[:, 0], segs[:, 1] + segs[:, 2], segs[:, 3]], axis=1)
        return b, h, phi_top, phi_bot, n_top, n_bot, phi_sw, spacing, segs, part_len

    def cost(self, X: np.ndarray) -> np.ndarray:
        """Material cost V_c*P_c + W_s*P_s for a batch of snapped designs."""
        m = self.model
        b, h, phi_top, phi_bot, n_top, n_bot, phi_sw, spacing, segs, part_len = \
            self._geometry(X)
        a_top = np.pi / 4.0 * phi_top**2
        a_bot = np.pi / 4.0 * phi_bot**2
        long_vol = np.sum(
            part_len * (n_top * a_top[:, None] + n_bot * a_bot[:, None]), axis=1)
        stirrup_len = 2.0 * ((b - 2 * m.cover) + (h - 2 * m.cover))
        # Fencepost count; the epsilon keeps exact multiples (0.5 m at
        # 0.1 m spacing -> 6 posts) stable against floating-point noise.
        stirrup_count = np.floor(part_len / spacing + 1e-9) + 1.0
        stirrup_vol = np.sum(stirrup_count, axis=1) * stirrup_len \
            * np.pi / 4.0 * phi_sw**2
        steel_vol = long_vol + stirrup_vol
        total_len = np.sum(segs, axis=1)
        concrete_vol = np.maximum(b * h * total_len - steel_vol, 0.0)
        return concrete_vol * m.concrete_price \
            + steel_vol * m.steel_density * m.steel_price

    def penalties(self, X: np.ndarray) -> np.ndarray:
        """Sum of quadratic constraint penalties per design."""
        m = self.model
        b, h, phi_top, phi_bot, n_top, n_bot, phi_sw, spacing, segs, _ = \
            self._geometry(X)
        d_eff = h - m.cover
        w = np.asarray(m.weights)

        def pf(demand, capacity, weight):
            ratio = demand / capacity
            return np.where(ratio > 1.0, weight * ratio**2, 0.0)

        total = np.zeros(X.shape[0])

        # Bending: tension steel is on top for the end parts, bottom mid.
        base_m = m.f_ctd * b * h**2 / 6.0
        steel_area = np.stack([
            n_top[:, 0] * np.pi / 4.0 * phi_top**2,
            n_bot[:, 1] * np.pi / 4.0 * phi_bot**2,
            n_top[:, 2] * np.pi / 4.0 * phi_top**2,
        ], axis=1)
        m_cap = base_m[:, None] + 0.9 * d_eff[:, None] * m.f_yd * steel_area
        for i in range(3):
            total += pf(m.moment_demand[i], m_cap[:, i], w[i])

        # Shear: concrete baseline plus two-leg stirrups.
        a_sw = 2.0 * np.pi / 4.0 * phi_sw**2
        v_cap = m.shear_stress * b[:, None] * d_eff[:, None] \
            + (a_sw[:, None] / spacing) * 0.9 * d_eff[:, None] * m.f_yd
        for i in range(3):
            total += pf(m.shear_demand[i], v_cap[:, i], w[3 + i])

        # Bar rows must fit across the width (worst part per face).
        for k, (n, phi, wt) in enumerate(
                ((n_top, phi_top, w[6]), (n_bot, phi_bot, w[7]))):
            n_max = np.max(n, axis=1)
            need = 2 * m.cover + n_max * phi \
                + np.maximum(n_max - 1.0, 0.0) * m.bar_gap
            total += pf(need, b, wt)

        # Deflection proxy on the gross section.
        inertia = b * h**3 / 12.0
        defl = 5.0 * m.load * m.span**4 / (384.0 * m.elastic_modulus * inertia)
        total += pf(defl, m.span / m.deflection_ratio, w[8])

        # Segment lengths must sum to the span (within half a grid step).
        dev = np.abs(np.sum(segs, axis=1) - m.span)
        total += pf(dev, m.length_tol, w[9])

        return total

    # -- objective ------------------------------------------------------

    def objective_batch(self, X: np.ndarray) -> np.ndarray:
        return self.cost(X) + self.penalties(X)

    def objective(self, x: np.ndarray) -> float:
        return float(self.objective_batch(np.asarray(x, dtype=float)[None, :])[0])


def beam_objective(design: np.ndarray, problem: BeamProblem | None = None) -> float:
    problem = problem or BeamProblem()
    return problem.objective(problem.prepare(np.asarray(design, dtype=float)))

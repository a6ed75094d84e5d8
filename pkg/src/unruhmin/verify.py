"""Seeded oracle suites: every closed form checked against an independent
brute-force route.

Suites:
  channel     closed-form Bloch coefficients vs the tripartite build +
              partial trace (both reductions)
  min         closed-form MIN vs the variational measurement search
  identities  N = Bmax^2/16 and the ordering N >= D
  tsc         closed-form sudden-change temperatures vs bisection

All randomness flows from one integer seed through numpy's default_rng, so
repeated runs are bit-identical.
"""

from __future__ import annotations

import math

import numpy as np

from . import dynamics
from .correlations import (
    chsh_bmax,
    geometric_discord,
    min_AI,
    min_AII,
    min_closed,
    min_variational,
)
from .states import XStateParams
from .unruh import (
    UnruhPoint,
    closed_form_AI,
    closed_form_AII,
    oracle_bloch,
    reduce_AI,
    reduce_AII,
)

TOL_CHANNEL = 1e-12
TOL_MIN = 1e-8
TOL_IDENTITY = 1e-12
TOL_ORDERING = 1e-12
TOL_TSC_REL = 1e-8


def random_physical_params(rng: np.random.Generator) -> XStateParams:
    """Uniform draw from the physical X-state tetrahedron (rejection)."""
    while True:
        c = rng.uniform(-1.0, 1.0, size=3)
        p = XStateParams(*c)
        if p.is_physical:
            return p


def random_unruh(rng: np.random.Generator, w: float = 1.0) -> UnruhPoint:
    """w/T log-uniform in [1e-3, 1e3]."""
    ratio = 10.0 ** rng.uniform(-3.0, 3.0)
    return UnruhPoint(w=w, T_unruh=w / ratio)


def _bloch_dev(a, b) -> float:
    return max(
        float(np.max(np.abs(a.x - b.x))),
        float(np.max(np.abs(a.y - b.y))),
        float(np.max(np.abs(a.T - b.T))),
    )


def suite_channel(seed: int, draws: int) -> dict:
    """Max entrywise deviation, closed-form Bloch vs partial-trace pipeline."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        p = random_physical_params(rng)
        u = random_unruh(rng)
        worst = max(worst, _bloch_dev(closed_form_AI(p, u), oracle_bloch(p, u, "AI")))
        worst = max(worst, _bloch_dev(closed_form_AII(p, u), oracle_bloch(p, u, "AII")))
    return {"suite": "channel", "draws": draws, "max_dev": float(worst),
            "tol": TOL_CHANNEL, "passed": bool(worst <= TOL_CHANNEL)}


def suite_min(seed: int, draws: int, resolution: int = 4096) -> dict:
    """Max |closed-form MIN - variational MIN| over both reductions."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        p = random_physical_params(rng)
        u = random_unruh(rng)
        for reduce, closed in ((reduce_AI, min_AI), (reduce_AII, min_AII)):
            n_var = min_variational(reduce(p, u), resolution=resolution)
            worst = max(worst, abs(closed(p, u) - n_var))
    return {"suite": "min", "draws": draws, "max_dev": float(worst),
            "tol": TOL_MIN, "passed": bool(worst <= TOL_MIN)}


def suite_identities(seed: int, draws: int) -> dict:
    """N = Bmax^2/16 (x = 0 case) and N >= D, on both reductions."""
    rng = np.random.default_rng(seed)
    worst_identity = 0.0
    worst_ordering = 0.0
    for _ in range(draws):
        p = random_physical_params(rng)
        u = random_unruh(rng)
        for cf in (closed_form_AI, closed_form_AII):
            b = cf(p, u)
            n, branch = min_closed(b)
            assert branch == "x=0"
            worst_identity = max(worst_identity, abs(n - chsh_bmax(b) ** 2 / 16.0))
            worst_ordering = max(worst_ordering, geometric_discord(b) - n)
    passed = worst_identity <= TOL_IDENTITY and worst_ordering <= TOL_ORDERING
    return {"suite": "identities", "draws": draws,
            "max_identity_dev": float(worst_identity),
            "max_ordering_violation": float(worst_ordering),
            "tol": TOL_IDENTITY, "passed": bool(passed)}


def random_sudden_params(rng: np.random.Generator, side: str) -> XStateParams:
    """Magnitude triple in regime ii_sudden for the given side.

    These are closed-form inputs; they need not be physical density
    matrices (the formulas depend only on the magnitudes).
    """
    a3 = rng.uniform(0.3, 1.0)
    thr = math.sqrt(2.0) / 2.0 * a3
    if side == "AI":
        m = rng.uniform(thr * 1.001, a3 * 0.999)
    else:
        m = rng.uniform(0.05, thr * 0.999)
    other = rng.uniform(m, 1.0)
    c1, c2 = (m, other) if rng.uniform() < 0.5 else (other, m)
    return XStateParams(c1, c2, a3)


def suite_tsc(seed: int, draws: int) -> dict:
    """Relative deviation of closed-form T_sc vs the bisection oracle."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for side, closed in (("AI", dynamics.t_sc_AI), ("AII", dynamics.t_sc_AII)):
        for _ in range(draws):
            p = random_sudden_params(rng, side)
            w = rng.uniform(0.5, 2.0)
            t_cf = closed(p, w)
            t_or = dynamics.t_sc_oracle(p, w, side)
            worst = max(worst, abs(t_cf - t_or) / t_cf)
    return {"suite": "tsc", "draws": draws, "max_rel_dev": float(worst),
            "tol": TOL_TSC_REL, "passed": bool(worst <= TOL_TSC_REL)}


def run_all(seed: int = 12345, draws: int = 200, min_draws: int | None = None) -> dict:
    """Run every suite; `min_draws` caps the (slow) variational suite."""
    if draws < 1:
        raise ValueError(f"draws must be >= 1, got {draws}")
    if min_draws is None:
        min_draws = min(draws, 25)
    suites = [
        suite_channel(seed, draws),
        suite_min(seed, min_draws),
        suite_identities(seed, draws),
        suite_tsc(seed, max(1, draws // 2)),
    ]
    return {"seed": seed, "draws": draws,
            "passed": bool(all(s["passed"] for s in suites)), "suites": suites}

import math

import numpy as np
import pytest

from unruhmin.qmat import partial_trace
from unruhmin.states import XStateParams, bloch_decompose, build_x_state, named_state
from unruhmin.unruh import (
    UnruhPoint,
    build_tripartite,
    closed_form_AI,
    closed_form_AII,
    oracle_bloch,
    reduce_AI,
    reduce_AII,
    thermal_amps,
)
from unruhmin.verify import random_physical_params, random_unruh


def bloch_dev(a, b):
    return max(
        np.max(np.abs(a.x - b.x)), np.max(np.abs(a.y - b.y)), np.max(np.abs(a.T - b.T))
    )


def test_thermal_amps_limits():
    a = thermal_amps(UnruhPoint(w=1.0, T_unruh=0.0))
    assert (a.f0, a.f1) == (1.0, 0.0)
    a = thermal_amps(UnruhPoint(w=1.0, T_unruh=math.inf))
    assert abs(a.f0 - 1 / math.sqrt(2)) < 1e-15
    assert abs(a.f1 - 1 / math.sqrt(2)) < 1e-15


def test_thermal_amps_ln2_point():
    a = thermal_amps(UnruhPoint(w=1.0, T_unruh=1 / math.log(2)))
    assert abs(a.f0 ** 2 - 2 / 3) < 1e-14
    assert abs(a.f1 ** 2 - 1 / 3) < 1e-14


def test_thermal_amps_normalized_on_grid():
    for t in np.geomspace(1e-8, 1e8, 100):
        a = thermal_amps(UnruhPoint(w=1.0, T_unruh=t))
        assert abs(a.f0 ** 2 + a.f1 ** 2 - 1.0) <= 1e-15


def test_overflow_guard():
    a = thermal_amps(UnruhPoint(w=1000.0, T_unruh=1e-3))
    assert (a.f0, a.f1) == (1.0, 0.0)


def test_only_ratio_matters():
    p = named_state("werner", 0.7)
    u1 = UnruhPoint(w=1.0, T_unruh=0.4)
    u2 = UnruhPoint(w=5.0, T_unruh=2.0)
    assert bloch_dev(closed_form_AI(p, u1), closed_form_AI(p, u2)) <= 1e-15
    assert bloch_dev(closed_form_AII(p, u1), closed_form_AII(p, u2)) <= 1e-15


def test_invalid_points_rejected():
    with pytest.raises(ValueError):
        UnruhPoint(w=0.0, T_unruh=1.0)
    with pytest.raises(ValueError):
        UnruhPoint(w=1.0, T_unruh=-0.5)


def test_tripartite_t_zero_recovers_input():
    p = named_state("werner", 0.6)
    rho_tri = build_tripartite(p, UnruhPoint(w=1.0, T_unruh=0.0))
    recovered = partial_trace(rho_tri, [2, 2, 2], keep=(0, 1))
    np.testing.assert_allclose(recovered, build_x_state(p), atol=1e-14)


def test_channel_only_touches_b():
    p = XStateParams(0, 0, 0)
    for t in (0.0, 0.5, 3.0):
        rho_tri = build_tripartite(p, UnruhPoint(w=1.0, T_unruh=t))
        a_marg = partial_trace(rho_tri, [2, 2, 2], keep=(0,))
        np.testing.assert_allclose(a_marg, np.eye(2) / 2, atol=1e-14)


def test_closed_form_t_zero():
    p = XStateParams(0.5, -0.4, 0.3)
    b = closed_form_AI(p, UnruhPoint(w=1.0, T_unruh=0.0))
    np.testing.assert_allclose(b.y, 0, atol=1e-15)
    np.testing.assert_allclose(b.T, np.diag([0.5, -0.4, 0.3]), atol=1e-15)
    b2 = closed_form_AII(p, UnruhPoint(w=1.0, T_unruh=0.0))
    np.testing.assert_allclose(b2.T, 0, atol=1e-15)
    np.testing.assert_allclose(b2.y, [0, 0, 1], atol=1e-15)


def test_closed_form_asymptotic_values():
    # closed forms are defined for magnitude triples regardless of state
    # physicality; this is the T -> inf substitution f0^2 = f1^2 = 1/2
    p = XStateParams(1.0, -0.9, 0.8)
    u = UnruhPoint(w=1.0, T_unruh=math.inf)
    b = closed_form_AI(p, u)
    s2 = 1 / math.sqrt(2)
    np.testing.assert_allclose(b.T, np.diag([s2, -0.9 * s2, 0.4]), atol=1e-15)
    np.testing.assert_allclose(b.y, [0, 0, -0.5], atol=1e-15)
    b2 = closed_form_AII(p, u)
    np.testing.assert_allclose(b2.T, np.diag([s2, 0.9 * s2, -0.4]), atol=1e-15)
    np.testing.assert_allclose(b2.y, [0, 0, 0.5], atol=1e-15)


def test_aii_t_zero_is_product_state():
    p = named_state("bell_phi_plus")
    rho = reduce_AII(p, UnruhPoint(w=1.0, T_unruh=0.0))
    expected = np.kron(np.eye(2) / 2, np.diag([1.0, 0.0]))
    np.testing.assert_allclose(rho, expected, atol=1e-14)


def test_closed_forms_match_partial_trace_oracle():
    rng = np.random.default_rng(31)
    for _ in range(50):
        p = random_physical_params(rng)
        u = random_unruh(rng)
        assert bloch_dev(closed_form_AI(p, u), oracle_bloch(p, u, "AI")) <= 1e-13
        assert bloch_dev(closed_form_AII(p, u), oracle_bloch(p, u, "AII")) <= 1e-13


def test_bell_ln2_reduction_matches_closed_form():
    p = named_state("bell_phi_plus")
    u = UnruhPoint(w=1.0, T_unruh=1 / math.log(2))
    assert bloch_dev(bloch_decompose(reduce_AI(p, u)), closed_form_AI(p, u)) <= 1e-13


def test_marginal_preservation():
    rng = np.random.default_rng(32)
    for _ in range(20):
        p = random_physical_params(rng)
        u = random_unruh(rng)
        for rho in (reduce_AI(p, u), reduce_AII(p, u)):
            a_marg = partial_trace(rho, [2, 2], keep=(0,))
            np.testing.assert_allclose(a_marg, np.eye(2) / 2, atol=1e-13)


def test_coefficient_flow_monotone_in_temperature():
    p = XStateParams(0.7, -0.6, 0.5)
    temps = np.geomspace(1e-3, 1e3, 100)
    ai = np.array([np.abs(np.diag(closed_form_AI(p, UnruhPoint(1.0, t)).T)) for t in temps])
    aii = np.array([np.abs(np.diag(closed_form_AII(p, UnruhPoint(1.0, t)).T)) for t in temps])
    assert np.all(np.diff(ai, axis=0) <= 1e-15)
    assert np.all(np.diff(aii, axis=0) >= -1e-15)

"""Fermionic Unruh channel for the B-mode of a two-qubit state.

An observer with proper acceleration a perceives the Minkowski vacuum of a
single Unruh mode of frequency w as a two-mode thermal state over the two
Rindler wedges I and II, at temperature T = a/(2*pi):

    |0> -> f0 |0>_I |0>_II + f1 |1>_I |1>_II,      |1> -> |1>_I |0>_II,

with f0 = (exp(-w/T)+1)^(-1/2), f1 = (exp(w/T)+1)^(-1/2).  This module
builds the full 8-dim state over A (x) I (x) II and exposes the closed-form
Bloch coefficients of the two physically distinct reductions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmat import partial_trace
from .states import BlochForm, XStateParams, bloch_decompose, build_x_state

# w/T beyond this is numerically indistinguishable from T = 0 in double
# precision (exp overflows near 709).
_WT_CLAMP = 700.0


@dataclass(frozen=True)
class UnruhPoint:
    """Mode frequency w > 0 and Unruh temperature T >= 0 (same units, k_B = 1).

    T = inf is accepted as a sentinel for the asymptotic limit and maps to
    w/T = 0 exactly.  Only the ratio w/T enters any output.
    """

    w: float
    T_unruh: float

    def __post_init__(self):
        if not (self.w > 0) or not math.isfinite(self.w):
            raise ValueError(f"mode frequency must be positive, got {self.w}")
        if math.isnan(self.T_unruh) or self.T_unruh < 0:
            raise ValueError(f"Unruh temperature must be >= 0, got {self.T_unruh}")

    @property
    def acceleration(self) -> float:
        """Proper acceleration a = 2*pi*T."""
        return 2.0 * math.pi * self.T_unruh

    @property
    def w_over_T(self) -> float:
        if math.isinf(self.T_unruh):
            return 0.0
        if self.T_unruh == 0.0:
            return math.inf
        return self.w / self.T_unruh


@dataclass(frozen=True)
class ThermalAmps:
    """Bogoliubov amplitudes (f0, f1) with f0^2 + f1^2 = 1."""

    f0: float
    f1: float


def thermal_amps(u: UnruhPoint) -> ThermalAmps:
    """f0 = (e^{-w/T}+1)^{-1/2}, f1 = (e^{w/T}+1)^{-1/2}, overflow-safe."""
    x = u.w_over_T
    if x > _WT_CLAMP or math.isinf(x):
        return ThermalAmps(1.0, 0.0)
    f0 = 1.0 / math.sqrt(math.exp(-x) + 1.0)
    f1 = 1.0 / math.sqrt(math.exp(x) + 1.0)
    return ThermalAmps(f0, f1)


def build_tripartite(p: XStateParams, u: UnruhPoint) -> np.ndarray:
    """The 8x8 state over A (x) I (x) II after the channel acts on B.

    Implemented as the isometry V: |0> -> f0|00> + f1|11>, |1> -> |10>
    applied to the B factor of the X state.
    """
    rho = build_x_state(p)
    a = thermal_amps(u)
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = a.f0  # |0>_I |0>_II
    v[3, 0] = a.f1  # |1>_I |1>_II
    v[2, 1] = 1.0  # |1>_I |0>_II
    m = np.kron(np.eye(2, dtype=complex), v)
    return m @ rho @ m.conj().T


def reduce_AI(p: XStateParams, u: UnruhPoint) -> np.ndarray:
    """rho_{A,I}: trace the tripartite state over wedge II."""
    return partial_trace(build_tripartite(p, u), [2, 2, 2], keep=(0, 1))


def reduce_AII(p: XStateParams, u: UnruhPoint) -> np.ndarray:
    """rho_{A,II}: trace the tripartite state over wedge I."""
    return partial_trace(build_tripartite(p, u), [2, 2, 2], keep=(0, 2))


def closed_form_AI(p: XStateParams, u: UnruhPoint) -> BlochForm:
    """Bloch coefficients of rho_{A,I}.

    x = 0, y = (0, 0, -f1^2), T = diag(c1*f0, c2*f0, c3*f0^2).
    """
    a = thermal_amps(u)
    f0sq = a.f0 * a.f0
    t = np.diag([p.c1 * a.f0, p.c2 * a.f0, p.c3 * f0sq])
    return BlochForm(x=np.zeros(3), y=np.array([0.0, 0.0, -a.f1 * a.f1]), T=t)


def closed_form_AII(p: XStateParams, u: UnruhPoint) -> BlochForm:
    """Bloch coefficients of rho_{A,II}.

    x = 0, y = (0, 0, f0^2), T = diag(c1*f1, -c2*f1, -c3*f1^2).
    """
    a = thermal_amps(u)
    f1sq = a.f1 * a.f1
    t = np.diag([p.c1 * a.f1, -p.c2 * a.f1, -p.c3 * f1sq])
    return BlochForm(x=np.zeros(3), y=np.array([0.0, 0.0, a.f0 * a.f0]), T=t)


def oracle_bloch(p: XStateParams, u: UnruhPoint, side: str) -> BlochForm:
    """Brute-force Bloch form via build_tripartite + partial_trace.

    Independent of the closed forms above; used to verify them.
    """
    if side == "AI":
        return bloch_decompose(reduce_AI(p, u))
    if side == "AII":
        return bloch_decompose(reduce_AII(p, u))
    raise ValueError(f"side must be 'AI' or 'AII', got {side!r}")

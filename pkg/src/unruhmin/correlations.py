"""Correlation quantifiers: MIN, geometric discord, maximal CHSH expectation.

MIN is the maximal squared Hilbert-Schmidt distance between a state and its
post-measurement state under local projective measurements on A that leave
A's marginal invariant.  The closed form for a two-qubit state with Bloch
data (x, T) is

    N = (1/4) (tr T T^t - x^t T T^t x / |x|^2)   if x != 0,
    N = (1/4) (tr T T^t - lambda_min(T T^t))     if x = 0,

and the variational search below maximizes the distance directly, serving
as a convention-free oracle for the constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmat import I2, PAULIS, eig_sym3, hs_norm_sq
from .states import BlochForm, XStateParams
from .unruh import UnruhPoint, thermal_amps

_X_ZERO_TOL = 1e-12
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass
class CorrelationReport:
    """All three measures at one parameter point."""

    N: float
    D: float
    Bmax: float
    branch: str  # "x=0" | "x!=0"
    method: str  # "closed_form" | "variational"


def min_closed(b: BlochForm) -> tuple[float, str]:
    """Closed-form MIN of a Bloch form; returns (N, branch)."""
    ttt = b.T @ b.T.T
    tr = float(np.trace(ttt))
    xnorm2 = float(b.x @ b.x)
    if math.sqrt(xnorm2) > _X_ZERO_TOL:
        correction = float(b.x @ ttt @ b.x) / xnorm2
        return 0.25 * (tr - correction), "x!=0"
    lam3 = float(eig_sym3(ttt)[0])
    return 0.25 * (tr - lam3), "x=0"


def chsh_bmax(b: BlochForm) -> float:
    """Maximal CHSH expectation 2*sqrt(mu1 + mu2), mu the top two eigenvalues
    of T T^t in the Tr[rho sigma_i (x) sigma_j] convention."""
    evals = eig_sym3(b.T @ b.T.T)
    return 2.0 * math.sqrt(max(evals[1] + evals[2], 0.0))


def geometric_discord(b: BlochForm) -> float:
    """D = (1/4)(|x|^2 + |T|_F^2 - k_max), k_max the top eigenvalue of
    K = x x^t + T T^t."""
    k = np.outer(b.x, b.x) + b.T @ b.T.T
    kmax = float(eig_sym3(k)[2])
    return 0.25 * (float(b.x @ b.x) + hs_norm_sq(b.T) - kmax)


def _ai_terms(p: XStateParams, u: UnruhPoint) -> tuple[float, float, float]:
    a = thermal_amps(u)
    f0sq = a.f0 * a.f0
    return (p.c1 ** 2 * f0sq, p.c2 ** 2 * f0sq, p.c3 ** 2 * f0sq * f0sq)


def _aii_terms(p: XStateParams, u: UnruhPoint) -> tuple[float, float, float]:
    a = thermal_amps(u)
    f1sq = a.f1 * a.f1
    return (p.c1 ** 2 * f1sq, p.c2 ** 2 * f1sq, p.c3 ** 2 * f1sq * f1sq)


def min_AI(p: XStateParams, u: UnruhPoint) -> float:
    """MIN of rho_{A,I}, direct evaluation of the explicit formula."""
    t = _ai_terms(p, u)
    return 0.25 * (sum(t) - min(t))


def min_AII(p: XStateParams, u: UnruhPoint) -> float:
    """MIN of rho_{A,II}; vanishes at T = 0."""
    t = _aii_terms(p, u)
    return 0.25 * (sum(t) - min(t))


def _post_measurement_batch(rho: np.ndarray, ns: np.ndarray) -> np.ndarray:
    """Objective |rho - Pi(rho)|_HS^2 for a batch of measurement axes.

    ns: (k, 3) unit vectors.  Pi_pm(n) = (I pm n.sigma)/2 on A.
    """
    sig = np.stack(PAULIS)  # (3, 2, 2)
    ndots = np.einsum("ki,iab->kab", ns, sig)
    proj_p = 0.5 * (I2[None, :, :] + ndots)
    proj_m = 0.5 * (I2[None, :, :] - ndots)
    # kron(P, I2) as a batch
    kp = np.einsum("kab,cd->kacbd", proj_p, I2).reshape(-1, 4, 4)
    km = np.einsum("kab,cd->kacbd", proj_m, I2).reshape(-1, 4, 4)
    post = kp @ rho @ kp + km @ rho @ km
    diff = rho[None, :, :] - post
    return np.sum(np.abs(diff) ** 2, axis=(1, 2))


def _fibonacci_sphere(n: int) -> np.ndarray:
    """Deterministic quasi-uniform unit vectors on S^2."""
    i = np.arange(n)
    z = 1.0 - 2.0 * (i + 0.5) / n
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = 2.0 * math.pi * i * _GOLDEN
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _golden_max(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Argmax of a unimodal f on [lo, hi] by golden-section search."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        else:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
    return 0.5 * (a + b)


def min_variational(
    rho: np.ndarray, resolution: int = 4096, refine_steps: int = 40
) -> float:
    """Brute-force MIN: maximize |rho - Pi(rho)|_HS^2 over admissible axes.

    The measurement must leave the A marginal invariant: if the A Bloch
    vector x is nonzero only n = +-x/|x| is admissible, otherwise the whole
    sphere is scanned (Fibonacci grid of `resolution` directions) and the
    best direction is refined by alternating golden-section searches on the
    spherical coordinates.
    """
    if resolution < 64:
        raise ValueError(f"resolution must be >= 64, got {resolution}")
    rho = np.asarray(rho, dtype=complex)
    from .states import bloch_decompose  # local import avoids a cycle

    x = bloch_decompose(rho).x
    xnorm = float(np.linalg.norm(x))
    if xnorm > _X_ZERO_TOL:
        n = (x / xnorm)[None, :]
        vals = _post_measurement_batch(rho, np.vstack([n, -n]))
        return float(vals.max())

    ns = _fibonacci_sphere(resolution)
    vals = _post_measurement_batch(rho, ns)
    best = int(np.argmax(vals))
    n0 = ns[best]
    theta = math.acos(min(1.0, max(-1.0, n0[2])))
    phi = math.atan2(n0[1], n0[0])

    def objective(th: float, ph: float) -> float:
        n = np.array(
            [[math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)]]
        )
        return float(_post_measurement_batch(rho, n)[0])

    # Alternating golden-section on (theta, phi).  The bracket only shrinks
    # when a pass stops moving: near-degenerate T T^t produces a flat ridge
    # along which the maximizer can sit far from the best grid direction,
    # and a forced shrink would stall there.
    delta = 2.0 * math.sqrt(4.0 * math.pi / resolution)
    for _ in range(refine_steps):
        tol = max(1e-10, 1e-2 * delta)
        new_theta = _golden_max(
            lambda t: objective(t, phi), theta - delta, theta + delta, tol
        )
        moved = abs(new_theta - theta)
        theta = new_theta
        new_phi = _golden_max(
            lambda p_: objective(theta, p_), phi - delta, phi + delta, tol
        )
        moved = max(moved, abs(new_phi - phi))
        phi = new_phi
        if moved < 0.4 * delta:
            delta *= 0.5
        if delta < 1e-10:
            break
    return max(float(vals[best]), objective(theta, phi))


def correlation_report(b: BlochForm, method: str = "closed_form") -> CorrelationReport:
    """Evaluate all three measures on one Bloch form."""
    n, branch = min_closed(b)
    return CorrelationReport(
        N=n, D=geometric_discord(b), Bmax=chsh_bmax(b), branch=branch, method=method
    )

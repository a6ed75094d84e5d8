"""Dense complex linear algebra for small fixed-size systems (dims 2, 3, 4, 8).

Everything here is a pure function on numpy arrays.  The eigensolver for
3x3 real symmetric matrices is analytic (trigonometric cubic) with an
LAPACK fallback for near-degenerate spectra.
"""

from __future__ import annotations

import math

import numpy as np

# Pauli matrices and the 2x2 identity, complex dtype throughout.
I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SX, SY, SZ)

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = -1e-10


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, a-index major."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hs_norm_sq(a: np.ndarray) -> float:
    """Squared Hilbert-Schmidt (Frobenius) norm: sum of |entry|^2."""
    a = np.asarray(a)
    return float(np.sum(np.abs(a) ** 2))


def check_density(rho: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, PSD within tolerance.

    Returns the array unchanged; raises ValueError on violation.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise ValueError(f"expected dim {dim}, got {rho.shape[0]}")
    if not np.all(np.isfinite(rho.view(float))):
        raise ValueError("density matrix has non-finite entries")
    herm_defect = np.max(np.abs(rho - rho.conj().T))
    if herm_defect > HERMITICITY_TOL:
        raise ValueError(f"not Hermitian: max |M - M^dag| = {herm_defect:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {tr} differs from 1 beyond tolerance")
    evals = np.linalg.eigvalsh(rho)
    if evals[0] < PSD_TOL:
        raise ValueError(f"not PSD: min eigenvalue {evals[0]:.3e}")
    return rho


def partial_trace(rho: np.ndarray, dims: list[int], keep) -> np.ndarray:
    """Reduced density matrix over the subsystems in `keep`.

    `dims` lists the subsystem dimensions in tensor order; `keep` is a
    nonempty proper subset of subsystem indices.  Kept subsystems retain
    their original relative order.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = list(dims)
    n = int(np.prod(dims))
    if rho.shape != (n, n):
        raise ValueError(f"dims {dims} imply shape {(n, n)}, got {rho.shape}")
    keep = sorted(set(keep))
    k = len(dims)
    if not keep or len(keep) >= k or any(i < 0 or i >= k for i in keep):
        raise ValueError(f"keep={keep} must be a nonempty proper subset of 0..{k - 1}")
    t = rho.reshape(dims + dims)
    row = list(range(k))
    col = [i + k if i in keep else i for i in range(k)]
    out = [i for i in keep] + [i + k for i in keep]
    reduced = np.einsum(t, row + col, out)
    dk = int(np.prod([dims[i] for i in keep]))
    return reduced.reshape(dk, dk)


def _eig_sym3_analytic(m: np.ndarray) -> np.ndarray | None:
    """Trigonometric closed form for a 3x3 symmetric eigenproblem.

    Returns None when the discriminant is too close to degenerate for the
    closed form to be trustworthy.
    """
    p1 = m[0, 1] ** 2 + m[0, 2] ** 2 + m[1, 2] ** 2
    if p1 == 0.0:
        return np.sort(np.diagonal(m).astype(float))
    q = np.trace(m) / 3.0
    p2 = (m[0, 0] - q) ** 2 + (m[1, 1] - q) ** 2 + (m[2, 2] - q) ** 2 + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    b = (m - q * np.eye(3)) / p
    r = np.linalg.det(b) / 2.0
    if abs(abs(r) - 1.0) < 1e-12:
        return None
    r = min(1.0, max(-1.0, r))
    phi = math.acos(r) / 3.0
    e_hi = q + 2.0 * p * math.cos(phi)
    e_lo = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    e_mid = 3.0 * q - e_hi - e_lo
    return np.array([e_lo, e_mid, e_hi])


def eig_sym3(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a 3x3 real symmetric matrix, ascending.

    Exact for diagonal input; falls back to LAPACK near degeneracy.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise ValueError(f"expected 3x3, got {m.shape}")
    if np.max(np.abs(m - m.T)) > 1e-12:
        raise ValueError("matrix is not symmetric")
    m = 0.5 * (m + m.T)
    evals = _eig_sym3_analytic(m)
    if evals is None:
        evals = np.linalg.eigvalsh(m)
    return evals

"""X-type two-qubit states: construction, physicality, Bloch interconversion.

The X-state family is rho = (1/4)(I + sum_i c_i sigma_i (x) sigma_i),
parameterized by the correlation triple (c1, c2, c3).  Basis ordering is
|00>, |01>, |10>, |11> with the left factor = subsystem A, everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import I2, PAULIS, check_density, tensor


class UnphysicalStateError(ValueError):
    """Raised when a parameter set does not define a positive semidefinite state."""


# Names of the four eigenvalue expressions of the X state, times 4.
_EIGEN_EXPRS = (
    ("(1 - c1 - c2 - c3)/4", lambda c1, c2, c3: 1 - c1 - c2 - c3),
    ("(1 - c1 + c2 + c3)/4", lambda c1, c2, c3: 1 - c1 + c2 + c3),
    ("(1 + c1 - c2 + c3)/4", lambda c1, c2, c3: 1 + c1 - c2 + c3),
    ("(1 + c1 + c2 - c3)/4", lambda c1, c2, c3: 1 + c1 + c2 - c3),
)

PHYSICALITY_TOL = -4e-12


@dataclass(frozen=True)
class XStateParams:
    """Correlation triple (c1, c2, c3), each in [-1, 1].

    Full quantum-state physicality (the four eigenvalue expressions being
    nonnegative) is checked by `require_physical` / `build_x_state`, not at
    construction: the closed-form correlation formulas depend only on the
    magnitudes and are routinely evaluated at magnitude triples that do not
    correspond to a density matrix.
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for name, v in (("c1", self.c1), ("c2", self.c2), ("c3", self.c3)):
            if not np.isfinite(v) or abs(v) > 1 + 1e-12:
                raise ValueError(f"|{name}| must be <= 1, got {v}")

    def eigenvalue_defects(self) -> list[tuple[str, float]]:
        """The four expressions 4*lambda_k, with their printable names."""
        return [(name, f(self.c1, self.c2, self.c3)) for name, f in _EIGEN_EXPRS]

    @property
    def is_physical(self) -> bool:
        return all(v >= PHYSICALITY_TOL for _, v in self.eigenvalue_defects())

    def magnitudes(self) -> tuple[float, float, float]:
        return (abs(self.c1), abs(self.c2), abs(self.c3))


def require_physical(p: XStateParams) -> XStateParams:
    """Raise UnphysicalStateError naming the violated eigenvalue expression."""
    for name, v in p.eigenvalue_defects():
        if v < PHYSICALITY_TOL:
            raise UnphysicalStateError(
                f"unphysical parameters ({p.c1}, {p.c2}, {p.c3}): "
                f"eigenvalue {name} = {v / 4:.6g} < 0"
            )
    return p


@dataclass
class BlochForm:
    """Pauli-basis decomposition of a two-qubit state.

    rho = (1/4)(I(x)I + sum x_i sigma_i(x)I + sum y_j I(x)sigma_j
                + sum t_ij sigma_i(x)sigma_j)
    with x_i = Tr[rho sigma_i(x)I] etc.
    """

    x: np.ndarray  # (3,)
    y: np.ndarray  # (3,)
    T: np.ndarray  # (3, 3)

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float).reshape(3)
        self.y = np.asarray(self.y, dtype=float).reshape(3)
        self.T = np.asarray(self.T, dtype=float).reshape(3, 3)


def build_x_state(p: XStateParams) -> np.ndarray:
    """The 4x4 density matrix (1/4)(I + sum c_i sigma_i (x) sigma_i)."""
    require_physical(p)
    c = (p.c1, p.c2, p.c3)
    rho = tensor(I2, I2)
    for ci, s in zip(c, PAULIS):
        rho = rho + ci * tensor(s, s)
    rho = rho / 4.0
    return check_density(rho, dim=4)


def bloch_decompose(rho: np.ndarray) -> BlochForm:
    """Pauli expectation values of a 4x4 density matrix.

    Imaginary parts of the traces are discarded (they are <= 1e-12 for any
    Hermitian input).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected 4x4, got {rho.shape}")
    x = np.array([np.trace(rho @ tensor(s, I2)).real for s in PAULIS])
    y = np.array([np.trace(rho @ tensor(I2, s)).real for s in PAULIS])
    t = np.array(
        [[np.trace(rho @ tensor(si, sj)).real for sj in PAULIS] for si in PAULIS]
    )
    return BlochForm(x=x, y=y, T=t)


def bloch_reconstruct(b: BlochForm) -> np.ndarray:
    """Inverse of bloch_decompose.  Rejects non-PSD reconstructions."""
    rho = tensor(I2, I2)
    for i, s in enumerate(PAULIS):
        rho = rho + b.x[i] * tensor(s, I2) + b.y[i] * tensor(I2, s)
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            rho = rho + b.T[i, j] * tensor(si, sj)
    rho = rho / 4.0
    evals = np.linalg.eigvalsh(rho)
    if evals[0] < -1e-10:
        raise UnphysicalStateError(
            f"Bloch form does not reconstruct a state: min eigenvalue {evals[0]:.3e}"
        )
    return rho


_BELL_PARAMS = {
    "bell_phi_plus": (1.0, -1.0, 1.0),
    "bell_phi_minus": (-1.0, 1.0, 1.0),
    "bell_psi_plus": (1.0, 1.0, -1.0),
    "bell_psi_minus": (-1.0, -1.0, -1.0),
}


def named_state(name: str, alpha: float | None = None) -> XStateParams:
    """Named parameter sets: the four Bell states and werner(alpha).

    werner(alpha) uses the sign convention (alpha, -alpha, alpha), which
    interpolates the maximally mixed state to |Phi+><Phi+| and is physical
    for alpha in [-1/3, 1].
    """
    if name == "werner":
        if alpha is None:
            raise ValueError("werner requires a mixing parameter alpha")
        return XStateParams(alpha, -alpha, alpha)
    if name in _BELL_PARAMS:
        if alpha is not None:
            raise ValueError(f"{name} takes no parameter")
        return XStateParams(*_BELL_PARAMS[name])
    raise ValueError(f"unknown state name {name!r}")

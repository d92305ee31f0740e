"""Driven three-qubit Ising dynamics.

States are length-8 complex vectors in the basis ``b = 4*b1 + 2*b2 + b3``
with ``b_i = 0`` for the ground level. ``sigma_z`` has eigenvalue -1 on the
ground level.
"""
import math

import numpy as np

from . import linalg
from .cavity import CouplingSet
from .errors import BadDimension, StepTooLarge
from .linalg import I2, SIGMA_X, SIGMA_Z

NORM_TOL = 1e-10


def site_operator(op, site):
    """Embed a single-qubit operator at ``site`` (1, 2 or 3)."""
    ops = [I2, I2, I2]
    ops[site - 1] = op
    return linalg.kron_all(*ops)


_Z = [site_operator(SIGMA_Z, k) for k in (1, 2, 3)]
_X = [site_operator(SIGMA_X, k) for k in (1, 2, 3)]
ZZ12 = _Z[0] @ _Z[1]
ZZ23 = _Z[1] @ _Z[2]
ZZ31 = _Z[2] @ _Z[0]
X_TOTAL = _X[0] + _X[1] + _X[2]


def _as_couplings(spec):
    if isinstance(spec, CouplingSet):
        return spec
    return CouplingSet(*spec)


def build_hamiltonian(spec):
    """H = J12 z1 z2 + J23 z2 z3 + J31 z3 z1 + Γ (x1 + x2 + x3).

    ``spec`` is a :class:`CouplingSet` or a ``(j12, j23, j31, gamma_laser)``
    tuple. The result is real symmetric, stored as complex.
    """
    c = _as_couplings(spec)
    return c.j12 * ZZ12 + c.j23 * ZZ23 + c.j31 * ZZ31 + c.gamma_laser * X_TOTAL


def basis_state(label="ggg"):
    """Product basis state from a three-letter g/e label, e.g. ``"geg"``."""
    if label == "ground":
        label = "ggg"
    if len(label) != 3 or set(label) - {"g", "e"}:
        raise ValueError(f"basis label must be three of 'g'/'e', got {label!r}")
    idx = sum(4 >> k for k, ch in enumerate(label) if ch == "e")
    psi = np.zeros(8, dtype=complex)
    psi[idx] = 1.0
    return psi


def _check_state(state):
    psi = np.asarray(state, dtype=complex)
    if psi.shape != (8,):
        raise BadDimension(f"expected a length-8 state, got shape {psi.shape}")
    n = np.linalg.norm(psi)
    if abs(n - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalized (norm {n!r})")
    return psi


class Propagator:
    """exp(-iHt) for many times from a single eigendecomposition."""

    def __init__(self, h):
        self.h = np.asarray(h, dtype=complex)
        self.eig = linalg.hermitian_eigen(self.h)

    def __call__(self, t):
        return linalg.spectral_exp(self.eig, t)

    def evolve(self, state, times):
        """States at each entry of ``times``, shape ``(len(times), 8)``."""
        v = self.eig.eigenvectors
        coeffs = linalg.dagger(v) @ state
        phases = np.exp(-1j * np.multiply.outer(np.asarray(times, float), self.eig.eigenvalues))
        return (phases * coeffs) @ v.T


def evolve(state, spec, t):
    """Spectral evolution ``|psi(t)> = exp(-iHt)|psi(0)>``."""
    psi = _check_state(state)
    return linalg.unitary_exp(build_hamiltonian(spec), t) @ psi


def evolve_rk4_oracle(state, spec, t, dt):
    """Integrate ``i d|psi>/dt = H|psi>`` with classical RK4.

    Independent check on :func:`evolve`. The state is not renormalized, so
    norm drift remains visible. The last step is shortened to land on ``t``.

    Raises
    ------
    StepTooLarge
        If ``||H||_2 * dt >= 0.1``.
    """
    psi = _check_state(state)
    h = build_hamiltonian(spec)
    hnorm = np.linalg.norm(h, 2)
    if not (dt > 0 and hnorm * dt < 0.1):
        raise StepTooLarge(f"||H|| * dt = {hnorm * dt:.3g} must be below 0.1")
    if t == 0:
        return psi.copy()
    a = -1j * h
    n = int(math.floor(t / dt + 1e-9))
    steps = [dt] * n
    rest = t - n * dt
    if rest > 1e-12 * max(1.0, t):
        steps.append(rest)
    for h_ in steps:
        k1 = a @ psi
        k2 = a @ (psi + 0.5 * h_ * k1)
        k3 = a @ (psi + 0.5 * h_ * k2)
        k4 = a @ (psi + h_ * k3)
        psi = psi + (h_ / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return psi


def reduced_density(state, pair):
    """Two-qubit reduced density matrix of ``|psi><psi|`` for ``pair``.

    Accepts a single state ``(8,)`` or a stack ``(k, 8)``.
    """
    psi = np.asarray(state, dtype=complex)
    if psi.shape[-1] != 8:
        raise BadDimension(f"expected length-8 states, got shape {psi.shape}")
    rho = psi[..., :, None] * np.conj(psi[..., None, :])
    return linalg.partial_trace(rho, pair)

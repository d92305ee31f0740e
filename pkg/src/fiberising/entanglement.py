"""Wootters concurrence and concurrence time series."""
from dataclasses import dataclass

import numpy as np

from . import linalg
from .dynamics import Propagator, _check_state, build_hamiltonian, reduced_density
from .errors import BadDimension
from .linalg import SIGMA_YY

RANGE_TOL = 1e-9


def spin_flip(rho):
    """(σy ⊗ σy) ρ* (σy ⊗ σy); accepts stacks of 4x4 matrices."""
    r = linalg.as_matrix(rho)
    if r.shape[-2:] != (4, 4):
        raise BadDimension(f"expected 4x4 matrix, got {r.shape[-2:]}")
    return SIGMA_YY @ np.conj(r) @ SIGMA_YY


def concurrence(rho):
    """Concurrence of a two-qubit density matrix.

    ``max(0, l1 - l2 - l3 - l4)`` with ``l_i`` the square roots of the
    eigenvalues of ``rho @ spin_flip(rho)`` in descending order. A stack of
    matrices returns an array.

    Eigenvalues below 1e-12 are set to zero before the square root, which
    suppresses round-off noise of order 1e-8 in the result but also means
    concurrences below about 1e-6 are reported as 0.
    """
    r = linalg.as_matrix(rho)
    lam = np.sqrt(linalg.general_eigenvalues_product(r, spin_flip(r)))
    c = lam[..., 0] - lam[..., 1] - lam[..., 2] - lam[..., 3]
    c = np.clip(c, 0.0, 1.0)
    return float(c) if c.ndim == 0 else c


def pure_state_concurrence(psi):
    """2|ad - bc| for a two-qubit pure state (a, b, c, d)."""
    a, b, c, d = np.asarray(psi, dtype=complex)
    return 2.0 * abs(a * d - b * c)


@dataclass(frozen=True)
class ConcurrenceSeries:
    times: np.ndarray
    c12: np.ndarray
    c23: np.ndarray
    c13: np.ndarray

    def __post_init__(self):
        n = len(self.times)
        for name in ("c12", "c23", "c13"):
            arr = getattr(self, name)
            if len(arr) != n:
                raise ValueError(f"{name} has length {len(arr)}, expected {n}")
            if np.any(arr < 0) or np.any(arr > 1 + RANGE_TOL):
                raise ValueError(f"{name} outside [0, 1]")
        if n > 1 and np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    def pair(self, name):
        return {"12": self.c12, "23": self.c23, "13": self.c13}[str(name).lstrip("cC")]


def concurrence_series(initial, spec, t_max, steps):
    """Pairwise concurrences on the uniform grid ``linspace(0, t_max, steps)``.

    The Hamiltonian is diagonalized once and every grid point is obtained
    from the same decomposition.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if not t_max > 0:
        raise ValueError(f"t_max must be > 0, got {t_max}")
    psi0 = _check_state(initial)
    times = np.linspace(0.0, float(t_max), int(steps))
    states = Propagator(build_hamiltonian(spec)).evolve(psi0, times)
    out = {}
    for key, pair in (("c12", (1, 2)), ("c23", (2, 3)), ("c13", (1, 3))):
        out[key] = np.clip(concurrence(reduced_density(states, pair)), 0.0, 1.0)
    return ConcurrenceSeries(times, **out)

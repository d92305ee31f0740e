"""Shared random fixtures and canonical states for the tests."""
import numpy as np


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (a + a.conj().T)


def random_density(rng, n, rank=None):
    rank = rank or n
    a = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_ket(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
GHZ = np.array([1, 0, 0, 0, 0, 0, 0, 1], dtype=complex) / np.sqrt(2)
# |egg> + |geg> + |gge>, basis index 4*b1 + 2*b2 + b3
W_STATE = np.zeros(8, dtype=complex)
W_STATE[[4, 2, 1]] = 1 / np.sqrt(3)


def stable_cavity_draws(count, seed=7, min_rate_fraction=0.1):
    """Random CavityParams whose mean-field drift relaxes.

    gamma0 in [0.5, 2], delta in [-2, 2], phases in [0, 2pi). Draws with a
    growing or near-marginal mode (slowest decay rate below
    ``min_rate_fraction * gamma0``) or a near-singular drift are rejected.
    """
    from fiberising.cavity import CavityParams, drift_matrix, slowest_decay_rate

    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        phis = rng.uniform(0, 2 * np.pi, size=4)
        p = CavityParams(
            gamma0=rng.uniform(0.5, 2.0),
            chi=rng.uniform(-1, 1),
            delta=rng.uniform(-2.0, 2.0),
            lambda_drive=complex(rng.uniform(0.2, 2.0), rng.uniform(-1, 1)),
            phi12=phis[0], phi21=phis[1], phi23=phis[2], phi32=phis[3],
        )
        if slowest_decay_rate(p) < min_rate_fraction * p.gamma0:
            continue
        if abs(np.linalg.det(drift_matrix(p))) < 1e-6:
            continue
        out.append(p)
    return out

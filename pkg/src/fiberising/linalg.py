"""Dense complex linear algebra for small (<= 8x8) operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Functions that
act on a single operator also accept stacks with shape ``(..., n, n)``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import BadDimension, BadPair, NonConvergence, NotHermitian, NotSquare

HERMITIAN_TOL = 1e-12
CLAMP_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
# basis order (g, e); sigma_z |g> = -|g>
SIGMA_Z = np.array([[-1, 0], [0, 1]], dtype=complex)
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)

PAIRS = ((1, 2), (2, 3), (1, 3))


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues[..., None, :]) @ dagger(v)


def as_matrix(a):
    """Return ``a`` as a complex array with at least two dimensions."""
    m = np.asarray(a, dtype=complex)
    if m.ndim < 2 or m.shape[-1] < 1 or m.shape[-2] < 1:
        raise BadDimension(f"expected a matrix, got shape {m.shape}")
    return m


def dagger(a):
    return np.conj(np.swapaxes(a, -1, -2))


def is_hermitian(a, tol=HERMITIAN_TOL):
    a = np.asarray(a)
    return a.shape[-1] == a.shape[-2] and np.max(np.abs(a - dagger(a)), initial=0.0) < tol


def _check_square(m):
    if m.shape[-1] != m.shape[-2]:
        raise NotSquare(f"matrix of shape {m.shape[-2:]} is not square")


def _check_hermitian(m, tol=HERMITIAN_TOL):
    _check_square(m)
    dev = np.max(np.abs(m - dagger(m)), initial=0.0)
    if not dev < tol:
        raise NotHermitian(f"max |A - A^H| = {dev:.3e} exceeds {tol:.0e}")


def kron(a, b):
    """Kronecker product of two matrices."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*ops):
    out = np.ones((1, 1), dtype=complex)
    for op in ops:
        out = np.kron(out, op)
    return out


def hermitian_eigen(a):
    """Eigendecomposition of a Hermitian matrix.

    Raises
    ------
    NotSquare
        If the trailing two dimensions differ.
    NotHermitian
        If ``max|A - A^H| >= 1e-12``.
    NonConvergence
        If LAPACK fails to converge.
    """
    m = as_matrix(a)
    _check_hermitian(m)
    # exact symmetrization removes round-off level asymmetry before LAPACK
    m = 0.5 * (m + dagger(m))
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(str(exc)) from exc
    return HermitianEigen(w, v)


def spectral_exp(eig, t):
    """exp(-i H t) from a precomputed decomposition; ``t`` may be an array.

    With array ``t`` of shape ``(k,)`` the result has shape ``(k, n, n)``.
    """
    t = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(t, eig.eigenvalues))
    v = eig.eigenvectors
    return (v * phases[..., None, :]) @ dagger(v)


def unitary_exp(h, t):
    """Return ``exp(-i h t)`` for Hermitian ``h`` via its spectral decomposition."""
    return spectral_exp(hermitian_eigen(h), t)


def psd_sqrt(rho):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues below zero (round-off) are clamped to zero.
    """
    eig = hermitian_eigen(rho)
    w = np.sqrt(np.clip(eig.eigenvalues, 0.0, None))
    v = eig.eigenvectors
    return (v * w[..., None, :]) @ dagger(v)


def partial_trace(rho, kept_pair):
    """Reduce a three-qubit density matrix to the qubit pair ``kept_pair``.

    Basis index is ``b = 4*b1 + 2*b2 + b3``; the kept qubits retain their
    relative order. Accepts stacks of shape ``(..., 8, 8)``.
    """
    m = as_matrix(rho)
    if m.shape[-2:] != (8, 8):
        raise BadDimension(f"expected an 8x8 density matrix, got {m.shape[-2:]}")
    pair = _normalize_pair(kept_pair)
    traced = ({1, 2, 3} - set(pair)).pop() - 1
    lead = m.shape[:-2]
    t = m.reshape(lead + (2, 2, 2, 2, 2, 2))
    nl = len(lead)
    t = np.trace(t, axis1=nl + traced, axis2=nl + 3 + traced)
    return t.reshape(lead + (4, 4))


def _normalize_pair(pair):
    try:
        p = tuple(sorted(int(q) for q in pair))
    except (TypeError, ValueError):
        raise BadPair(f"invalid qubit pair {pair!r}") from None
    if p not in PAIRS:
        raise BadPair(f"qubit pair must be one of {PAIRS}, got {pair!r}")
    return p


def general_eigenvalues_product(rho, rho_tilde):
    """Eigenvalues of the non-Hermitian product ``rho @ rho_tilde``.

    Computed from the Hermitian similar matrix ``sqrt(rho) rho_tilde sqrt(rho)``,
    which has the same spectrum. Returned as non-negative reals sorted
    descending, with round-off negatives clamped to zero.
    """
    r = as_matrix(rho)
    rt = as_matrix(rho_tilde)
    if r.shape[-2:] != (4, 4) or rt.shape[-2:] != (4, 4):
        raise BadDimension("expected 4x4 two-qubit matrices")
    s = psd_sqrt(r)
    h = s @ rt @ s
    h = 0.5 * (h + dagger(h))
    try:
        w = np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(str(exc)) from exc
    w = np.where(np.abs(w) < CLAMP_TOL, 0.0, w)
    w = np.clip(w, 0.0, None)
    return w[..., ::-1]

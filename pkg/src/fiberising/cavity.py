"""Cavity/fiber parameters to steady-state fields and effective Ising couplings.

Three cavities are chained by fibers: 1 <-> 2 <-> 3. Cavity 1 is driven with
amplitude ``lambda_drive``. In the mean-field closure every input-noise
expectation vanishes and the dispersive ``chi * sigma_z`` terms are dropped,
leaving the linear drift

    d(alpha)/dt   = -M alpha + g0 e^{i phi12} beta + Lambda
    d(beta)/dt    = -M beta  + g0 e^{i phi21} alpha + g0 e^{i phi23} gamma_c
    d(gamma_c)/dt = -M gamma_c + g0 e^{i phi32} beta

with ``M = i delta + g0`` and ``g0 = gamma0``.

Two steady-state routes are provided. :func:`steady_state_printed` evaluates
the closed-form published expressions verbatim. :func:`steady_state_firstprinciples`
solves the linear fixed point above directly. They agree on ``beta`` given
``alpha`` and on ``gamma_c`` given ``beta``, but the closed-form ``alpha``
is *not* the fixed point of the drift in general (for delta = gamma0 =
Lambda = 1 and zero phases the closed form gives 0.3 - 0.6i, the linear
solve 0.25 - 0.5i). Neither is adjusted to match the other.

The coupling formulas in :func:`couplings` are likewise verbatim; note that
``J23`` reuses ``alpha * conj(beta)`` (the same amplitudes as ``J12``) rather
than the ``beta * conj(gamma_c)`` a symmetric chain would suggest.
"""
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DegenerateCoupling,
    DegenerateSteadyState,
    NotConverged,
    SingularSystem,
    StepTooLarge,
    UnstableFixedPoint,
)

DEGENERACY_TOL = 1e-12
CHI_CONSISTENCY_TOL = 1e-12


@dataclass(frozen=True)
class CavityParams:
    """Physical inputs (hbar = 1, rates in angular-frequency units).

    ``g`` is optional; when supplied together with a nonzero ``delta`` the
    dispersive shift must satisfy ``chi = g**2 / delta``.
    """

    gamma0: float
    chi: float
    delta: float
    lambda_drive: complex
    phi12: float = 0.0
    phi21: float = 0.0
    phi23: float = 0.0
    phi32: float = 0.0
    nu: float = 0.0
    fiber_length: float = 0.0
    g: float | None = None

    def __post_init__(self):
        problems = self.violations()
        if problems:
            raise ValueError("; ".join(problems))

    def violations(self):
        out = []
        if not (math.isfinite(self.gamma0) and self.gamma0 > 0):
            out.append(f"gamma0 must be finite and > 0, got {self.gamma0}")
        if not math.isfinite(self.chi):
            out.append("chi must be finite")
        if not math.isfinite(self.delta):
            out.append("delta must be finite")
        if not np.isfinite(self.lambda_drive):
            out.append("lambda_drive must be finite")
        for name in ("phi12", "phi21", "phi23", "phi32"):
            if not math.isfinite(getattr(self, name)):
                out.append(f"{name} must be finite")
        if not (self.nu >= 0):
            out.append(f"nu must be >= 0, got {self.nu}")
        if not (self.fiber_length >= 0):
            out.append(f"fiber_length must be >= 0, got {self.fiber_length}")
        if self.g is not None and self.delta != 0:
            expected = self.g**2 / self.delta
            if abs(self.chi - expected) >= CHI_CONSISTENCY_TOL:
                out.append(f"chi={self.chi} inconsistent with g**2/delta={expected}")
        return out

    @property
    def m(self):
        return complex(self.gamma0, self.delta)

    @property
    def w2(self):
        g0 = self.gamma0
        return g0**2 * (
            0.25
            + np.exp(1j * (self.phi21 + self.phi12))
            + np.exp(1j * (self.phi32 + self.phi23))
        )

    def with_drive(self, lambda_drive):
        return replace(self, lambda_drive=lambda_drive)


@dataclass(frozen=True)
class FieldSteadyState:
    alpha: complex
    beta: complex
    gamma_c: complex

    def as_array(self):
        return np.array([self.alpha, self.beta, self.gamma_c], dtype=complex)


@dataclass(frozen=True)
class CouplingSet:
    j12: float
    j23: float
    j31: float
    gamma_laser: float = 0.0

    def __post_init__(self):
        vals = (self.j12, self.j23, self.j31, self.gamma_laser)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"couplings must be finite, got {vals}")
        if self.gamma_laser < 0:
            raise ValueError(f"gamma_laser must be >= 0, got {self.gamma_laser}")

    def as_tuple(self):
        return (self.j12, self.j23, self.j31, self.gamma_laser)


def steady_state_printed(p):
    """Closed-form stationary amplitudes, evaluated exactly as published.

    Raises
    ------
    DegenerateSteadyState
        If the ``alpha`` denominator has magnitude <= 1e-12.
    """
    m, g0, lam = p.m, p.gamma0, p.lambda_drive
    e12_21 = np.exp(1j * (p.phi12 + p.phi21))
    e23_32 = np.exp(1j * (p.phi23 + p.phi32))
    denom = m**2 * (m + g0) - m * g0 * (e12_21 + e23_32)
    if abs(denom) <= DEGENERACY_TOL:
        raise DegenerateSteadyState(f"|denominator| = {abs(denom):.3e}")
    alpha = lam * (m * (m + g0) - g0**2 * e23_32) / denom
    beta = (m * alpha - lam) / (g0 * np.exp(1j * p.phi12))
    gamma_c = g0 * np.exp(1j * p.phi32) * beta / m
    return FieldSteadyState(complex(alpha), complex(beta), complex(gamma_c))


def drift_matrix(p):
    """Matrix ``A`` of the mean-field drift ``dx/dt = A x + b``."""
    m, g0 = p.m, p.gamma0
    e = np.exp(1j * np.array([p.phi12, p.phi21, p.phi23, p.phi32]))
    return np.array(
        [
            [-m, g0 * e[0], 0],
            [g0 * e[1], -m, g0 * e[2]],
            [0, g0 * e[3], -m],
        ],
        dtype=complex,
    )


def drive_vector(p):
    return np.array([p.lambda_drive, 0, 0], dtype=complex)


def steady_state_firstprinciples(p):
    """Solve the linear mean-field fixed point ``A x + b = 0`` directly.

    Raises
    ------
    SingularSystem
        If ``|det A| <= 1e-12``.
    """
    a = drift_matrix(p)
    if abs(np.linalg.det(a)) <= DEGENERACY_TOL:
        raise SingularSystem(f"|det| = {abs(np.linalg.det(a)):.3e}")
    x = np.linalg.solve(a, -drive_vector(p))
    return FieldSteadyState(complex(x[0]), complex(x[1]), complex(x[2]))


def slowest_decay_rate(p):
    """Smallest relaxation rate of the drift; negative means a growing mode."""
    return float(-np.max(np.linalg.eigvals(drift_matrix(p)).real))


def _rk4(f, x, dt, n):
    for _ in range(n):
        k1 = f(x)
        k2 = f(x + 0.5 * dt * k1)
        k3 = f(x + 0.5 * dt * k2)
        k4 = f(x + dt * k3)
        x = x + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return x


def meanfield_integrate(p, t_end, dt, tol=1e-6):
    """Relax the mean-field amplitudes from zero with classical RK4.

    Parameters
    ----------
    p : CavityParams
    t_end : float
        Integration horizon; must be at least ``20 / gamma0``.
    dt : float
        Step; ``gamma0 * dt`` must be below 0.1.
    tol : float
        Bound on ``|dx/dt|`` at ``t_end`` for the result to count as settled.

    Raises
    ------
    StepTooLarge
        If ``gamma0 * dt >= 0.1``.
    ValueError
        If ``t_end < 20 / gamma0``.
    UnstableFixedPoint
        If the drift has an eigenvalue with non-negative real part.
    NotConverged
        If the final time derivative exceeds ``tol``.
    """
    if not (dt > 0 and p.gamma0 * dt < 0.1):
        raise StepTooLarge(f"gamma0*dt = {p.gamma0 * dt} must be in (0, 0.1)")
    if t_end < 20.0 / p.gamma0:
        raise ValueError(f"t_end must be >= 20/gamma0 = {20.0 / p.gamma0}")
    a = drift_matrix(p)
    b = drive_vector(p)
    rate = slowest_decay_rate(p)
    if rate <= 0 and np.any(b):
        raise UnstableFixedPoint(
            f"drift has a non-decaying mode (slowest rate {rate:.4g}); "
            "the fixed point is not reachable by relaxation"
        )

    def f(x):
        return a @ x + b

    n = int(math.ceil(t_end / dt - 1e-9))
    x = _rk4(f, np.zeros(3, dtype=complex), t_end / n, n)
    residual = np.max(np.abs(f(x)))
    if not residual <= tol:
        raise NotConverged(f"|dx/dt| = {residual:.3e} at t_end = {t_end}")
    return FieldSteadyState(complex(x[0]), complex(x[1]), complex(x[2]))


def couplings(p, s, gamma_laser=0.0):
    """Effective Ising couplings J12, J23, J31 from steady-state amplitudes.

    Raises
    ------
    DegenerateCoupling
        If ``|M**2 - W**2| <= 1e-12``.
    """
    m, g0 = p.m, p.gamma0
    d = m**2 - p.w2
    if abs(d) <= DEGENERACY_TOL:
        raise DegenerateCoupling(f"|M^2 - W^2| = {abs(d):.3e}")
    pref = g0 * p.chi**2
    ab = s.alpha * np.conj(s.beta)
    j12 = pref * np.imag(ab * np.exp(1j * p.phi21) / d)
    j23 = pref * np.imag(ab * np.exp(1j * p.phi32) / d)
    j31 = pref * np.imag(
        g0 * s.gamma_c * np.conj(s.alpha)
        * (np.exp(1j * p.phi23) + np.exp(1j * p.phi12))
        / (m * d)
    )
    return CouplingSet(float(j12), float(j23), float(j31), gamma_laser)


def apply_fiber_loss(c, nu, length):
    """Attenuate the Ising couplings by ``exp(-nu * length)``; Γ is untouched."""
    if nu < 0 or length < 0:
        raise ValueError("nu and length must be non-negative")
    f = math.exp(-nu * length)
    return CouplingSet(c.j12 * f, c.j23 * f, c.j31 * f, c.gamma_laser)

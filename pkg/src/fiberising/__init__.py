"""Three atoms in fiber-connected cavities: effective Ising couplings,
driven three-qubit dynamics and pairwise concurrence."""

from .errors import FiberIsingError
from .cavity import (
    CavityParams,
    CouplingSet,
    FieldSteadyState,
    apply_fiber_loss,
    couplings,
    meanfield_integrate,
    steady_state_firstprinciples,
    steady_state_printed,
)
from .dynamics import (
    basis_state,
    build_hamiltonian,
    evolve,
    evolve_rk4_oracle,
    reduced_density,
)
from .entanglement import ConcurrenceSeries, concurrence, concurrence_series, spin_flip

__version__ = "0.1.0"

__all__ = [
    "FiberIsingError",
    "CavityParams",
    "CouplingSet",
    "FieldSteadyState",
    "apply_fiber_loss",
    "couplings",
    "meanfield_integrate",
    "steady_state_firstprinciples",
    "steady_state_printed",
    "basis_state",
    "build_hamiltonian",
    "evolve",
    "evolve_rk4_oracle",
    "reduced_density",
    "ConcurrenceSeries",
    "concurrence",
    "concurrence_series",
    "spin_flip",
]

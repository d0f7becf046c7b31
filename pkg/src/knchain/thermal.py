"""Gibbs equilibrium states and thermal concurrence evaluation.

Temperatures are in energy units with the Boltzmann constant set to 1.
"""

from __future__ import annotations

import numpy as np

from .entanglement import pair_concurrence
from .linalg import hermitian_eig
from .model import DEGENERACY_WINDOW, ChainSpec, build_hamiltonian


def gibbs_state(h: np.ndarray, temperature: float) -> np.ndarray:
    """Equilibrium density matrix exp(-H/T) / Z.

    Computed in the eigenbasis with the spectrum shifted by its minimum so
    the exponentials never overflow.  At exactly zero temperature the
    result is the normalized projector onto the (possibly degenerate)
    ground space, the degeneracy window matching the one used by
    ``model.ground_state``.
    """
    if temperature < 0:
        raise ValueError(f"temperature must be >= 0, got {temperature}")
    eigenvalues, v = hermitian_eig(h)
    if temperature == 0:
        window = DEGENERACY_WINDOW * max(1.0, abs(float(eigenvalues[0])))
        g = int(np.sum(eigenvalues - eigenvalues[0] <= window))
        ground = v[:, :g]
        rho = (ground @ ground.conj().T) / g
    else:
        weights = np.exp(-(eigenvalues - eigenvalues[0]) / temperature)
        weights /= weights.sum()
        rho = (v * weights) @ v.conj().T
    return (rho + rho.conj().T) / 2


def thermal_pair_concurrence(
    spec: ChainSpec, qubit_a: int, qubit_b: int, temperature: float
) -> float:
    """Concurrence of a qubit pair in the chain's equilibrium state."""
    rho = gibbs_state(build_hamiltonian(spec), temperature)
    return pair_concurrence(rho, qubit_a, qubit_b)

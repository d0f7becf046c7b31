"""Kondo-necklace chain specifications, Hamiltonians, and closed-form oracles.

The model is a ring of N sites.  Each site i carries a conduction
pseudo-spin tau_i and a localized spin s_i, both spin-1/2 (sigma/2).  The
Hamiltonian is

    H = W sum_i (tau_i^x tau_{i+1}^x [+ tau_i^y tau_{i+1}^y])
      + J sum_i s_i . tau_i
      + B sum_i (s_i^z + tau_i^z)

with the y-y hopping term present in the isotropic ("xy") variant and
absent in the Ising ("x") variant.  Periodic boundaries run the bond sum
literally over i = 1..N with tau_{N+1} = tau_1, so the two-site ring
carries a doubled tau bond of strength 2W; this is the convention under
which the two-site closed forms below reproduce exact diagonalization.
For a single site the bond term is omitted entirely.

Qubit layout: site i (0-based) owns qubit 2i for tau_i and qubit 2i+1 for
s_i, with qubit 0 the most significant tensor factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError
from .linalg import (
    SPIN_X,
    SPIN_Y,
    SPIN_Z,
    Spectrum,
    embed_pair,
    embed_single,
    hermitian_eig,
)

DIMENSION_CAP = 4096
DEGENERACY_WINDOW = 1e-9
ANISOTROPIES = ("xy", "x")
BOUNDARIES = ("periodic", "open")


@dataclass(frozen=True)
class ChainSpec:
    """Complete, temperature-independent description of one chain.

    ``hopping`` is the tau-bond energy W >= 0, ``kondo`` the on-site
    exchange J (negative for ferromagnetic coupling), ``field`` the
    longitudinal field B >= 0.
    """

    n_sites: int
    hopping: float = 1.0
    kondo: float = 1.0
    field: float = 0.0
    anisotropy: str = "xy"
    boundary: str = "periodic"

    def __post_init__(self) -> None:
        if self.n_sites < 1:
            raise ValueError(f"n_sites must be >= 1, got {self.n_sites}")
        if self.hopping < 0:
            raise ValueError(f"hopping must be >= 0, got {self.hopping}")
        if self.field < 0:
            raise ValueError(f"field must be >= 0, got {self.field}")
        if self.anisotropy not in ANISOTROPIES:
            raise ValueError(f"anisotropy must be one of {ANISOTROPIES}, got {self.anisotropy!r}")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")
        if self.dim > DIMENSION_CAP:
            raise CapacityError(
                f"Hilbert dimension 4**{self.n_sites} = {self.dim} exceeds the "
                f"dense cap {DIMENSION_CAP} (max 6 sites)"
            )

    @property
    def n_qubits(self) -> int:
        return 2 * self.n_sites

    @property
    def dim(self) -> int:
        return 4**self.n_sites

    def tau_qubit(self, site: int) -> int:
        """Qubit index of the conduction pseudo-spin on a 0-based site."""
        if not 0 <= site < self.n_sites:
            raise IndexError(f"site {site} out of range for {self.n_sites} sites")
        return 2 * site

    def spin_qubit(self, site: int) -> int:
        """Qubit index of the localized spin on a 0-based site."""
        if not 0 <= site < self.n_sites:
            raise IndexError(f"site {site} out of range for {self.n_sites} sites")
        return 2 * site + 1

    def tau_bonds(self) -> list[tuple[int, int]]:
        """Site pairs entering the hopping sum, with literal wraparound.

        Periodic N = 2 yields [(0, 1), (1, 0)]: the same bond twice.
        """
        n = self.n_sites
        if n < 2:
            return []
        if self.boundary == "periodic":
            return [(i, (i + 1) % n) for i in range(n)]
        return [(i, i + 1) for i in range(n - 1)]


@dataclass(frozen=True)
class GroundSolution:
    """Minimum-eigenvalue solution of one chain.

    ``degeneracy`` counts eigenvalues within DEGENERACY_WINDOW * max(1, |E0|)
    of the minimum; ``spectrum`` keeps the full decomposition so callers can
    reach the degenerate manifold.
    """

    energy: float
    state: np.ndarray
    degeneracy: int
    spectrum: Spectrum


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Assemble the dense Hamiltonian for a chain specification.

    Hermitian and real-symmetric in the standard basis.  The isotropic
    variant conserves total magnetization sum_i (s_i^z + tau_i^z); the
    Ising variant does not.
    """
    nq = spec.n_qubits
    h = np.zeros((spec.dim, spec.dim), dtype=complex)

    w = spec.hopping
    if w != 0.0:
        for i, k in spec.tau_bonds():
            a, b = spec.tau_qubit(i), spec.tau_qubit(k)
            h += w * embed_pair(SPIN_X, a, SPIN_X, b, nq)
            if spec.anisotropy == "xy":
                h += w * embed_pair(SPIN_Y, a, SPIN_Y, b, nq)

    j = spec.kondo
    if j != 0.0:
        for i in range(spec.n_sites):
            t, s = spec.tau_qubit(i), spec.spin_qubit(i)
            for op in (SPIN_X, SPIN_Y, SPIN_Z):
                h += j * embed_pair(op, s, op, t, nq)

    b_field = spec.field
    if b_field != 0.0:
        for q in range(nq):
            h += b_field * embed_single(SPIN_Z, q, nq)

    return h


def ground_state(spec: ChainSpec) -> GroundSolution:
    """Diagonalize the chain and return its ground-state solution.

    The returned state is the phase-canonicalized minimum-eigenvalue
    column; at an exact degeneracy it is one deterministic representative
    of the ground manifold (see ``degeneracy`` and ``spectrum``).
    """
    spectrum = hermitian_eig(build_hamiltonian(spec))
    e0 = float(spectrum.eigenvalues[0])
    window = DEGENERACY_WINDOW * max(1.0, abs(e0))
    degeneracy = int(np.sum(spectrum.eigenvalues - e0 <= window))
    return GroundSolution(
        energy=e0,
        state=spectrum.eigenvectors[:, 0].copy(),
        degeneracy=degeneracy,
        spectrum=spectrum,
    )


def closed_lambda_xy(j: float, w: float) -> float:
    """Ground-state energy of the two-site periodic isotropic ring.

    Cubic-root closed form in the couplings; limits: -3J/2 at W = 0 (two
    decoupled exchange dimers) and -W at J = 0 (doubled tau bond).
    """
    if j == 0.0 and w == 0.0:
        raise ValueError("closed_lambda_xy is undefined at j = w = 0")
    q = (4.0 * j * j + 3.0 * w * w) / 9.0
    arg = -j * (9.0 * w * w - 16.0 * j * j) / (54.0 * math.sqrt(q**3))
    if arg > 1.0 or arg < -1.0:
        if abs(arg) > 1.0 + 1e-12:
            raise ValueError(f"arccos argument {arg!r} outside [-1, 1]")
        arg = max(-1.0, min(1.0, arg))
    theta = math.acos(arg)
    return -j / 6.0 - 2.0 * math.sqrt(q) * math.cos(theta / 3.0)


def closed_beta(j: float, w: float) -> float:
    """Amplitude ratio of the two-site Ising-variant ground state."""
    if w <= 0.0:
        raise ValueError(f"closed_beta requires w > 0, got {w}")
    return (2.0 * j + math.sqrt(4.0 * j * j + w * w)) / w


def closed_c_ac_x(j: float, w: float) -> float:
    """Exchange-pair concurrence closed form for the two-site Ising variant.

    Zero at J = 0, monotonically increasing in J at fixed W, approaching 1
    as W/J vanishes.
    """
    if j < 0.0:
        raise ValueError(f"closed_c_ac_x requires j >= 0, got {j}")
    beta = closed_beta(j, w)
    return (beta * beta - 1.0) / (beta * beta + 1.0)


def closed_alpha(j: float, w: float) -> tuple[float, float, float]:
    """Amplitudes (alpha1, alpha2) and normalization of the two-site
    isotropic ground state, evaluated from ``closed_lambda_xy``."""
    if j == 0.0 or w == 0.0:
        raise ValueError("closed_alpha requires j != 0 and w != 0")
    lam = closed_lambda_xy(j, w)
    alpha1 = (j + 2.0 * lam) / (2.0 * j)
    alpha2 = (lam * lam + lam * j - 3.0 * j * j / 4.0) / (w * j)
    n_xy = 1.0 / math.sqrt(2.0 * (1.0 + alpha1 * alpha1 + alpha2 * alpha2))
    return alpha1, alpha2, n_xy

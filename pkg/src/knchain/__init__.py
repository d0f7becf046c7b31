"""Exact diagonalization and entanglement toolkit for Kondo-necklace chains.

Dense spin-1/2 machinery for the one-dimensional necklace of conduction
pseudo-spins coupled to localized moments: Hamiltonian assembly for the
isotropic and Ising variants, ground and Gibbs states, Wootters pair
concurrence, single-qubit concurrence with its monogamy audit, parameter
sweeps, and critical-field / entanglement-death finders.
"""

from .entanglement import (
    CkwAudit,
    ckw_audit,
    concurrence,
    min_single_qubit_concurrence,
    pair_concurrence,
    partial_trace,
    single_qubit_concurrence,
)
from .errors import (
    CapacityError,
    ConvergenceError,
    HermiticityError,
    PositivityError,
    PurityError,
)
from .linalg import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SPIN_X,
    SPIN_Y,
    SPIN_Z,
    Spectrum,
    embed_pair,
    embed_single,
    hermitian_eig,
    hermitian_func,
    kron,
)
from .model import (
    ChainSpec,
    GroundSolution,
    build_hamiltonian,
    closed_alpha,
    closed_beta,
    closed_c_ac_x,
    closed_lambda_xy,
    ground_state,
)
from .scan import (
    AxisSpec,
    Crossing,
    CrossingReport,
    Quantity,
    ScanGrid,
    ScanRecord,
    evaluate_point,
    find_crossings,
    find_death_temperature,
    fit_bc_line,
    ground_quantity,
    sweep,
)
from .thermal import gibbs_state, thermal_pair_concurrence

__version__ = "0.1.0"

__all__ = [
    "AxisSpec",
    "CapacityError",
    "ChainSpec",
    "CkwAudit",
    "ConvergenceError",
    "Crossing",
    "CrossingReport",
    "GroundSolution",
    "HermiticityError",
    "IDENTITY",
    "PositivityError",
    "PurityError",
    "Quantity",
    "ScanGrid",
    "ScanRecord",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SPIN_X",
    "SPIN_Y",
    "SPIN_Z",
    "Spectrum",
    "build_hamiltonian",
    "ckw_audit",
    "closed_alpha",
    "closed_beta",
    "closed_c_ac_x",
    "closed_lambda_xy",
    "concurrence",
    "embed_pair",
    "embed_single",
    "evaluate_point",
    "find_crossings",
    "find_death_temperature",
    "fit_bc_line",
    "gibbs_state",
    "ground_quantity",
    "ground_state",
    "hermitian_eig",
    "hermitian_func",
    "kron",
    "min_single_qubit_concurrence",
    "pair_concurrence",
    "partial_trace",
    "single_qubit_concurrence",
    "sweep",
    "thermal_pair_concurrence",
]

"""Reduced density matrices and the entanglement measures built on them.

Pairwise entanglement is the Wootters concurrence obtained from the
spin-flipped density matrix; the entanglement of one qubit with the rest
of a globally pure register is 2 sqrt(det rho_1).  Complex conjugation is
always taken in the standard basis fixed in ``linalg``.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import PositivityError, PurityError
from .linalg import SIGMA_Y, kron

NEGATIVE_EIGENVALUE_CLAMP = 1e-10
PURITY_TOL = 1e-8
CKW_SLACK = 1e-9

SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y)

# eigenvalues of a density matrix below this floor are numerically zero;
# left in place they re-enter at sqrt scale and spoil the concurrence
_EIGENVALUE_FLOOR = 64 * np.finfo(float).eps


def _n_qubits(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def _as_density(state_or_rho: np.ndarray) -> np.ndarray:
    arr = np.asarray(state_or_rho, dtype=complex)
    if arr.ndim == 1:
        return np.outer(arr, arr.conj())
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        return arr
    raise ValueError(f"expected a state vector or square matrix, got shape {arr.shape}")


def check_density_matrix(rho: np.ndarray) -> None:
    """Validate trace one, Hermiticity, and positivity within tolerance."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > 1e-10:
        raise ValueError(f"density matrix trace {trace} is not 1 within 1e-10")
    if np.abs(rho - rho.conj().T).max() > 1e-10:
        raise ValueError("density matrix is not Hermitian within 1e-10")
    smallest = float(np.linalg.eigvalsh(rho)[0])
    if smallest < -1e-9:
        raise PositivityError(f"density matrix eigenvalue {smallest} below -1e-9")


def partial_trace(rho: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """Trace a multi-qubit density matrix down to the qubits in ``keep``.

    ``keep`` must be strictly ascending; the output qubit order follows it.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    n = _n_qubits(rho.shape[0])
    keep = list(keep)
    if not keep:
        raise ValueError("keep must name at least one qubit")
    if any(keep[i] >= keep[i + 1] for i in range(len(keep) - 1)):
        raise ValueError(f"keep indices must be strictly ascending, got {keep}")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep indices {keep} out of range for {n} qubits")

    drop = [q for q in range(n) if q not in keep]
    tensor = rho.reshape((2,) * (2 * n))
    perm = keep + drop + [n + q for q in keep] + [n + q for q in drop]
    tensor = tensor.transpose(perm)
    dim_keep = 2 ** len(keep)
    dim_drop = 2 ** len(drop)
    tensor = tensor.reshape(dim_keep, dim_drop, dim_keep, dim_drop)
    return np.trace(tensor, axis1=1, axis2=3)


def _reduced_from_state(state: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """Reduction of |psi><psi| to ``keep`` without forming the full matrix."""
    n = _n_qubits(state.shape[0])
    keep = list(keep)
    rest = [q for q in range(n) if q not in keep]
    tensor = state.reshape((2,) * n).transpose(keep + rest)
    m = tensor.reshape(2 ** len(keep), 2 ** len(rest))
    return m @ m.conj().T


def concurrence(rho2: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The inputs of the max(lambda_1 - lambda_2 - lambda_3 - lambda_4, 0)
    rule are computed as the singular values of
    sqrt(D) V^T (sigma_y x sigma_y) V sqrt(D) with rho = V D V^dagger,
    which carries the same spectrum as the spin-flipped product
    rho (sigma_y x sigma_y) rho^* (sigma_y x sigma_y) but never squares the
    small eigenvalues, keeping the result accurate to solver precision.
    Eigenvalues of rho below -1e-10 raise instead of being clamped.
    """
    rho2 = np.asarray(rho2, dtype=complex)
    if rho2.shape != (4, 4):
        raise ValueError(f"concurrence needs a 4x4 density matrix, got shape {rho2.shape}")
    check_density_matrix(rho2)
    populations, v = np.linalg.eigh(rho2)
    if populations[0] < -NEGATIVE_EIGENVALUE_CLAMP:
        raise PositivityError(
            f"density-matrix eigenvalue {populations[0]} below the "
            f"-{NEGATIVE_EIGENVALUE_CLAMP:.0e} clamping window"
        )
    populations = np.clip(populations, 0.0, None)
    populations[populations < _EIGENVALUE_FLOOR * max(1.0, populations.max())] = 0.0
    root = np.sqrt(populations)
    flipped_overlaps = (root[:, None] * (v.T @ SPIN_FLIP @ v)) * root[None, :]
    lam = np.linalg.svd(flipped_overlaps, compute_uv=False)
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def pair_concurrence(state_or_rho: np.ndarray, qubit_a: int, qubit_b: int) -> float:
    """Concurrence between two qubits of a larger register."""
    if qubit_a == qubit_b:
        raise ValueError("pair_concurrence requires two distinct qubits")
    arr = np.asarray(state_or_rho, dtype=complex)
    keep = sorted((qubit_a, qubit_b))
    n = _n_qubits(arr.shape[0])
    if keep[0] < 0 or keep[1] >= n:
        raise ValueError(f"qubits {(qubit_a, qubit_b)} out of range for {n} qubits")
    if arr.ndim == 1:
        reduced = _reduced_from_state(arr, keep)
    else:
        reduced = partial_trace(arr, keep)
    return concurrence(reduced)


def single_qubit_concurrence(state: np.ndarray, qubit: int) -> float:
    """Entanglement of one qubit with the rest of a globally pure register.

    Equals 2 sqrt(det rho_1).  Defined for pure states only: a density
    matrix whose purity falls below 1 - 1e-8 raises PurityError.
    """
    arr = np.asarray(state, dtype=complex)
    n = _n_qubits(arr.shape[0])
    if not 0 <= qubit < n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    if arr.ndim == 1:
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"state norm {norm} is not 1 within 1e-10")
        reduced = _reduced_from_state(arr, [qubit])
    elif arr.ndim == 2:
        purity = float(np.trace(arr @ arr).real)
        if purity < 1.0 - PURITY_TOL:
            raise PurityError(
                f"single-qubit concurrence is defined for pure states; purity {purity}"
            )
        reduced = partial_trace(arr, [qubit])
    else:
        raise ValueError(f"expected a vector or square matrix, got shape {arr.shape}")
    determinant = float(np.linalg.det(reduced).real)
    if determinant < -1e-12:
        raise PositivityError(f"det rho_1 = {determinant} below -1e-12")
    return 2.0 * math.sqrt(max(determinant, 0.0))


class CkwAudit(NamedTuple):
    """Monogamy audit: sum of squared pair concurrences from one pivot
    against the squared single-qubit bound."""

    pair_sq_sum: float
    bound: float
    holds: bool


def ckw_audit(state: np.ndarray, pivot: int) -> CkwAudit:
    """Check the squared-concurrence monogamy inequality on a pure state."""
    arr = np.asarray(state, dtype=complex)
    n = _n_qubits(arr.shape[0])
    if not 0 <= pivot < n:
        raise ValueError(f"pivot {pivot} out of range for {n} qubits")
    pair_sq_sum = 0.0
    for other in range(n):
        if other == pivot:
            continue
        pair_sq_sum += pair_concurrence(arr, pivot, other) ** 2
    bound = single_qubit_concurrence(arr, pivot) ** 2
    return CkwAudit(pair_sq_sum=pair_sq_sum, bound=bound, holds=pair_sq_sum <= bound + CKW_SLACK)


def min_single_qubit_concurrence(basis: np.ndarray, qubit: int) -> float:
    """Minimum single-qubit concurrence over unit vectors in a subspace.

    ``basis`` holds orthonormal columns spanning the subspace (typically a
    degenerate ground manifold).  The reported value is the infimum of
    2 sqrt(det rho_1) over the manifold: the entanglement a state of that
    energy must carry.  Writing each vector as a 2 x (dim/2) block matrix
    across the pivot split, det rho_1 vanishes iff some combination of the
    columns has linearly dependent blocks, so the minimum reduces to
    minimizing the smallest singular value of the block pencil
    cos(t) A_0 + e^{i phi} sin(t) A_1 over one complex ray.
    """
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim == 1:
        basis = basis[:, None]
    dim, g = basis.shape
    n = _n_qubits(dim)
    if not 0 <= qubit < n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    half = dim // 2
    blocks = np.moveaxis(basis.reshape((2,) * n + (g,)), qubit, 0).reshape(2, half, g)
    if g >= half:
        # a subspace of C^2 (x) C^half with dimension >= half always
        # contains a vector that is a product across the split
        return 0.0
    a0, a1 = blocks[0], blocks[1]

    def smallest_sv(t: float, phi: float) -> float:
        pencil = math.cos(t) * a0 + cmath.exp(1j * phi) * math.sin(t) * a1
        return float(np.linalg.svd(pencil, compute_uv=False)[-1])

    best_val = math.inf
    best_t, best_phi = 0.0, 0.0
    for t in np.linspace(0.0, math.pi / 2, 33):
        for phi in np.linspace(0.0, 2 * math.pi, 64, endpoint=False):
            val = smallest_sv(t, phi)
            if val < best_val:
                best_val, best_t, best_phi = val, float(t), float(phi)
    span_t = math.pi / 64
    span_phi = math.pi / 32
    for _ in range(36):
        for dt in (-1.0, -0.5, 0.0, 0.5, 1.0):
            for dp in (-1.0, -0.5, 0.0, 0.5, 1.0):
                t = min(max(best_t + dt * span_t, 0.0), math.pi / 2)
                phi = best_phi + dp * span_phi
                val = smallest_sv(t, phi)
                if val < best_val:
                    best_val, best_t, best_phi = val, t, phi
        span_t /= 2
        span_phi /= 2

    weight = min(best_val * best_val, 0.5)
    return 2.0 * math.sqrt(weight * (1.0 - weight))

"""Dense complex-matrix kernel for small spin systems.

Tensor products, embedding of local operators into a multi-qubit register,
Hermitian eigendecomposition with deterministic phase conventions, and
matrix functions of Hermitian operators.

Basis convention: qubit 0 is the most significant tensor factor, so the
computational index b encodes |q0 q1 ... q_{n-1}> with bit value 0 meaning
spin-up |+> and bit value 1 meaning spin-down |->.  The standard two-qubit
basis {|++>, |+->, |-+>, |-->} therefore sits at indices {0, 1, 2, 3}.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .errors import ConvergenceError, HermiticityError

HERMITICITY_TOL = 1e-12
PHASE_FIX_CUTOFF = 1e-8

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# spin-1/2 operators
SPIN_X = SIGMA_X / 2
SPIN_Y = SIGMA_Y / 2
SPIN_Z = SIGMA_Z / 2


class Spectrum(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; column k of ``eigenvectors`` is
    the orthonormal eigenvector paired with ``eigenvalues[k]``, with its
    phase fixed so the first entry of modulus above ``PHASE_FIX_CUTOFF`` is
    real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    """Check A = A^dagger within ``tol`` relative to max|A|."""
    a = np.asarray(a)
    scale = np.abs(a).max() if a.size else 0.0
    return bool(np.abs(a - a.conj().T).max() <= tol * scale)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"left factor must be square, got shape {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"right factor must be square, got shape {b.shape}")
    return np.kron(a, b)


def _check_single_qubit_op(op: np.ndarray) -> np.ndarray:
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        raise ValueError(f"expected a 2x2 operator, got shape {op.shape}")
    return op


def embed_single(op: np.ndarray, qubit: int, n_qubits: int) -> np.ndarray:
    """Embed a single-qubit operator at position ``qubit`` of an n-qubit register.

    Returns I x ... x op x ... x I with qubit 0 as the most significant
    factor; the result has dimension 2**n_qubits.
    """
    op = _check_single_qubit_op(op)
    if not 0 <= qubit < n_qubits:
        raise IndexError(f"qubit {qubit} out of range for {n_qubits} qubits")
    left = np.eye(2**qubit, dtype=complex)
    right = np.eye(2 ** (n_qubits - qubit - 1), dtype=complex)
    return np.kron(np.kron(left, op), right)


def embed_pair(
    op_a: np.ndarray,
    qubit_a: int,
    op_b: np.ndarray,
    qubit_b: int,
    n_qubits: int,
) -> np.ndarray:
    """Embed a product of two single-qubit operators on distinct qubits.

    Equal to embed_single(op_a, qubit_a, n) @ embed_single(op_b, qubit_b, n);
    built as one Kronecker chain to avoid the full-dimension matmul.
    """
    op_a = _check_single_qubit_op(op_a)
    op_b = _check_single_qubit_op(op_b)
    if qubit_a == qubit_b:
        raise ValueError("embed_pair requires two distinct qubits")
    for q in (qubit_a, qubit_b):
        if not 0 <= q < n_qubits:
            raise IndexError(f"qubit {q} out of range for {n_qubits} qubits")
    (p, op_p), (q, op_q) = sorted(((qubit_a, op_a), (qubit_b, op_b)), key=lambda t: t[0])
    out = np.eye(2**p, dtype=complex)
    out = np.kron(out, op_p)
    out = np.kron(out, np.eye(2 ** (q - p - 1), dtype=complex))
    out = np.kron(out, op_q)
    return np.kron(out, np.eye(2 ** (n_qubits - q - 1), dtype=complex))


def canonicalize_phase(vector: np.ndarray) -> np.ndarray:
    """Rotate a global phase so the first significant entry is real positive."""
    for entry in vector:
        if abs(entry) > PHASE_FIX_CUTOFF:
            return vector * (entry.conjugate() / abs(entry))
    return vector


def hermitian_eig(h: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues ascend; each eigenvector is phase-canonicalized so repeated
    runs produce identical output.  Raises HermiticityError if the input is
    not Hermitian within tolerance and ConvergenceError if the dense solver
    fails.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    scale = np.abs(h).max()
    deviation = np.abs(h - h.conj().T).max()
    if deviation > HERMITICITY_TOL * scale:
        raise HermiticityError(
            f"matrix is not Hermitian: max|A - A^dag| = {deviation:.3e} "
            f"exceeds {HERMITICITY_TOL:.0e} * max|A| = {HERMITICITY_TOL * scale:.3e}"
        )
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"dense Hermitian eigensolver failed: {exc}") from exc
    eigenvectors = eigenvectors.copy()
    for k in range(eigenvectors.shape[1]):
        eigenvectors[:, k] = canonicalize_phase(eigenvectors[:, k])
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def hermitian_func(h: np.ndarray, f: Callable[[float], float]) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix via its eigenbasis.

    Returns V f(Lambda) V^dagger, symmetrized against roundoff.
    """
    eigenvalues, v = hermitian_eig(h)
    fw = np.array([float(f(x)) for x in eigenvalues])
    out = (v * fw) @ v.conj().T
    return (out + out.conj().T) / 2

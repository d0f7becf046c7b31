import numpy as np
import pytest
from oracles import expm_taylor, random_hermitian

from knchain.errors import HermiticityError
from knchain.linalg import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SPIN_Z,
    embed_pair,
    embed_single,
    hermitian_eig,
    hermitian_func,
    kron,
)


class TestKron:
    def test_identity_case(self):
        assert np.allclose(kron(IDENTITY, IDENTITY), np.eye(4))

    def test_sigma_x_sigma_z_entries(self):
        m = kron(SIGMA_X, SIGMA_Z)
        assert m[0, 2] == 1
        assert m[1, 3] == -1
        assert np.all(np.diag(m) == 0)

    def test_spin_flip_matrix(self):
        # sigma_y x sigma_y multiplied out by hand: anti-diagonal -1, 1, 1, -1
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 3] = -1
        expected[1, 2] = 1
        expected[2, 1] = 1
        expected[3, 0] = -1
        assert np.allclose(kron(SIGMA_Y, SIGMA_Y), expected)

    def test_associative(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        c = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        lhs = kron(kron(a, b), c)
        rhs = kron(a, kron(b, c))
        # identical index layout; the entries are the same triple products,
        # multiplied in a different order, so allow one ulp of slack
        assert np.abs(lhs - rhs).max() <= 1e-15 * np.abs(lhs).max()

    def test_trace_multiplicative(self):
        rng = np.random.default_rng(8)
        for _ in range(5):
            a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            lhs = np.trace(kron(a, b))
            rhs = np.trace(a) * np.trace(b)
            assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            kron(np.ones((2, 3)), IDENTITY)


class TestEmbed:
    def test_single_qubit_register(self):
        assert np.allclose(embed_single(SPIN_Z, 0, 1), SPIN_Z)

    def test_most_significant_convention(self):
        diag = np.diag(embed_single(SPIN_Z, 0, 2)).real
        assert np.allclose(diag, [0.5, 0.5, -0.5, -0.5])

    def test_least_significant_convention(self):
        diag = np.diag(embed_single(SPIN_Z, 1, 2)).real
        assert np.allclose(diag, [0.5, -0.5, 0.5, -0.5])

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            embed_single(SPIN_Z, 2, 2)

    def test_pair_ising_diagonal(self):
        diag = np.diag(embed_pair(SPIN_Z, 0, SPIN_Z, 1, 2)).real
        assert np.allclose(diag, [0.25, -0.25, -0.25, 0.25])

    def test_pair_reduces_to_kron(self):
        rng = np.random.default_rng(9)
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        assert np.allclose(embed_pair(a, 0, b, 1, 2), kron(a, b))

    def test_pair_equals_product_of_singles(self):
        lhs = embed_pair(SIGMA_X / 2, 0, SIGMA_X / 2, 2, 3)
        rhs = embed_single(SIGMA_X / 2, 0, 3) @ embed_single(SIGMA_X / 2, 2, 3)
        assert np.allclose(lhs, rhs, atol=1e-15)

    def test_pair_order_irrelevant(self):
        rng = np.random.default_rng(10)
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        assert np.allclose(embed_pair(a, 1, b, 3, 4), embed_pair(b, 3, a, 1, 4))

    def test_pair_rejects_equal_indices(self):
        with pytest.raises(ValueError):
            embed_pair(SPIN_Z, 1, SPIN_Z, 1, 3)

    def test_distinct_qubit_operators_commute(self):
        rng = np.random.default_rng(11)
        a = random_hermitian(rng, 2)
        b = random_hermitian(rng, 2)
        ea = embed_single(a, 0, 3)
        eb = embed_single(b, 2, 3)
        assert np.abs(ea @ eb - eb @ ea).max() <= 1e-12


class TestHermitianEig:
    def test_diagonal_input(self):
        spectrum = hermitian_eig(np.diag([3.0, 1.0, 2.0]).astype(complex))
        assert np.allclose(spectrum.eigenvalues, [1.0, 2.0, 3.0])
        perm = np.abs(spectrum.eigenvectors)
        assert np.allclose(perm @ perm.T, np.eye(3))

    def test_pauli_spectrum(self):
        spectrum = hermitian_eig(SIGMA_X)
        assert np.allclose(spectrum.eigenvalues, [-1.0, 1.0])

    def test_orthonormal_and_reconstructs(self):
        rng = np.random.default_rng(12)
        h = random_hermitian(rng, 12)
        w, v = hermitian_eig(h)
        assert np.linalg.norm(v.conj().T @ v - np.eye(12)) <= 1e-10
        recon = (v * w) @ v.conj().T
        assert np.linalg.norm(recon - h) <= 1e-10 * max(1.0, np.linalg.norm(h))
        assert np.all(np.diff(w) >= 0)

    def test_eigenvalue_sum_is_trace(self):
        rng = np.random.default_rng(13)
        h = random_hermitian(rng, 9)
        w, _ = hermitian_eig(h)
        trace = np.trace(h).real
        assert abs(w.sum() - trace) <= 1e-10 * max(1.0, abs(trace))

    def test_phase_canonicalization(self):
        rng = np.random.default_rng(14)
        h = random_hermitian(rng, 6)
        _, v = hermitian_eig(h)
        for k in range(6):
            first = next(x for x in v[:, k] if abs(x) > 1e-8)
            assert first.real > 0
            assert abs(first.imag) <= 1e-12

    def test_rejects_non_hermitian(self):
        with pytest.raises(HermiticityError):
            hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


class TestHermitianFunc:
    def test_identity_map(self):
        rng = np.random.default_rng(15)
        h = random_hermitian(rng, 7)
        assert np.abs(hermitian_func(h, lambda x: x) - h).max() <= 1e-10

    def test_exp_of_diagonal(self):
        h = np.diag([0.0, np.log(2.0)]).astype(complex)
        assert np.allclose(hermitian_func(h, np.exp), np.diag([1.0, 2.0]))

    def test_exp_matches_taylor_oracle(self):
        rng = np.random.default_rng(16)
        h = random_hermitian(rng, 8)
        t = 0.7
        via_eig = hermitian_func(h, lambda x: np.exp(-x / t))
        via_series = expm_taylor(-h / t)
        assert np.abs(via_eig - via_series).max() <= 1e-8

    def test_exp_log_roundtrip(self):
        rng = np.random.default_rng(17)
        a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        positive = a @ a.conj().T + 0.5 * np.eye(6)
        logged = hermitian_func(positive, np.log)
        back = hermitian_func(logged, np.exp)
        assert np.abs(back - positive).max() <= 1e-8

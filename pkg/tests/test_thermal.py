import numpy as np
import pytest
from oracles import random_hermitian

from knchain.model import ChainSpec, build_hamiltonian, ground_state
from knchain.thermal import gibbs_state, thermal_pair_concurrence

UNIT_SPEC = ChainSpec(n_sites=2, hopping=1.0, kondo=1.0)


class TestGibbsState:
    def test_rejects_negative_temperature(self):
        with pytest.raises(ValueError):
            gibbs_state(np.eye(4, dtype=complex), -0.1)

    def test_infinite_temperature_limit(self):
        rng = np.random.default_rng(41)
        h = random_hermitian(rng, 4)
        rho = gibbs_state(h, 1e12)
        assert np.abs(rho - np.eye(4) / 4).max() <= 1e-10

    def test_zero_temperature_nondegenerate(self):
        h = np.diag([0.0, 1.0, 2.0]).astype(complex)
        rho = gibbs_state(h, 0.0)
        expected = np.zeros((3, 3))
        expected[0, 0] = 1.0
        assert np.abs(rho - expected).max() <= 1e-12

    def test_zero_temperature_degenerate_mixture(self):
        # pure hopping ring: rank-4 equal mixture over the lowest level
        h = build_hamiltonian(ChainSpec(n_sites=2, hopping=1.0, kondo=0.0))
        rho = gibbs_state(h, 0.0)
        populations = np.linalg.eigvalsh(rho)
        occupied = populations[populations > 1e-12]
        assert len(occupied) == 4
        assert np.abs(occupied - 0.25).max() <= 1e-12

    def test_density_matrix_invariants(self):
        h = build_hamiltonian(UNIT_SPEC)
        for t in (0.0, 0.3, 5.0):
            rho = gibbs_state(h, t)
            assert abs(np.trace(rho) - 1.0) <= 1e-10
            assert np.abs(rho - rho.conj().T).max() <= 1e-10
            assert np.linalg.eigvalsh(rho)[0] >= -1e-9

    def test_commutes_with_hamiltonian(self):
        h = build_hamiltonian(UNIT_SPEC)
        rho = gibbs_state(h, 0.7)
        assert np.abs(rho @ h - h @ rho).max() <= 1e-10

    def test_energy_nondecreasing_in_temperature(self):
        h = build_hamiltonian(UNIT_SPEC)
        energies = [
            float(np.trace(gibbs_state(h, t) @ h).real) for t in np.linspace(0.05, 4.0, 25)
        ]
        assert all(b >= a - 1e-10 for a, b in zip(energies, energies[1:]))

    def test_small_temperature_matches_projector(self):
        # spectral gap here is well above 1e-2
        h = build_hamiltonian(UNIT_SPEC)
        cold = gibbs_state(h, 1e-6)
        frozen = gibbs_state(h, 0.0)
        assert np.abs(cold - frozen).max() <= 1e-4


class TestThermalPairConcurrence:
    def test_low_temperature_recovers_ground_state(self):
        state = ground_state(UNIT_SPEC).state
        from knchain.entanglement import pair_concurrence

        cold = thermal_pair_concurrence(UNIT_SPEC, 0, 1, 0.01)
        assert abs(cold - pair_concurrence(state, 0, 1)) <= 1e-3

    def test_hopping_pair_rises_before_decaying(self):
        temps = np.linspace(0.01, 2.0, 41)
        values = [thermal_pair_concurrence(UNIT_SPEC, 0, 2, t) for t in temps]
        peak = int(np.argmax(values))
        assert values[peak] > values[0] + 1e-6
        assert values[-1] < values[peak] - 1e-6

    def test_exchange_pair_nonincreasing(self):
        temps = np.linspace(0.0, 2.0, 21)
        values = [thermal_pair_concurrence(UNIT_SPEC, 0, 1, t) for t in temps]
        assert all(b <= a + 1e-9 for a, b in zip(values, values[1:]))

    def test_sudden_death_at_high_temperature(self):
        for spec in (UNIT_SPEC, ChainSpec(n_sites=2, hopping=1.0, kondo=2.0)):
            t = 50.0 * max(abs(spec.kondo), spec.hopping)
            for pair in ((0, 1), (0, 2), (0, 3)):
                assert thermal_pair_concurrence(spec, *pair, t) <= 1e-6

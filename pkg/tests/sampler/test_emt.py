"""Tests for the energy-momentum tensor of lattice configurations."""

import numpy as np
import pytest
from kgvacuum.sampler.emt import emt_components
from kgvacuum.sampler.emt import vacuum_emt_target
from kgvacuum.sampler.ensemble import EnsembleSpec
from kgvacuum.sampler.ensemble import sample_vacuum
from kgvacuum.sampler.estimators import estimate_mean
from kgvacuum.sampler.one_particle import one_particle_emt_target
from kgvacuum.spectral.field import FieldConfiguration
from kgvacuum.spectral.field import hamiltonian
from kgvacuum.spectral.lattice import LatticeSpec
from kgvacuum.spectral.lattice import dispersion
from kgvacuum.spectral.lattice import wavenumber_grid
from kgvacuum.spectral.regularizers import Regularizer
from kgvacuum.spectral.test_functions import TestFunction


@pytest.fixture
def lattice():
    return LatticeSpec(n_per_side=6, spacing=0.5)


class TestEmtComponents:
    def test_zero_configuration(self, lattice):
        assert np.all(emt_components(FieldConfiguration.zeros(lattice), 1.0, 1.0) == 0.0)

    def test_symmetric_and_energy_is_hamiltonian(self, lattice):
        spec = EnsembleSpec(lattice=lattice, reg=Regularizer.kg_vacuum(1.3, kT=0.7, hbar=1.1), count=3, seed=5)
        for config in sample_vacuum(spec):
            tensor = emt_components(config, 1.3, 0.7, 1.1)
            assert tensor.shape == (4, 4)
            assert np.allclose(tensor, tensor.T)
            assert tensor[0, 0] == pytest.approx(hamiltonian(config, spec.reg), rel=1e-12)

    def test_single_mode_pair(self, lattice):
        a = 0.4 - 0.3j
        config = FieldConfiguration.single_mode(lattice, (1, 0, 0), a)
        tensor = emt_components(config, 1.0, 2.0)
        kx, _, _ = wavenumber_grid(lattice)
        k = float(kx[1, 0, 0])
        omega = float(dispersion(np.array([k, 0.0, 0.0]), 1.0))
        assert tensor[0, 1] == pytest.approx(0.0, abs=1e-12)
        assert tensor[1, 1] == pytest.approx(2.0 * 2.0 * abs(a) ** 2 * k**2 / (lattice.volume * omega), rel=1e-12)
        assert tensor[2, 2] == 0.0
        assert tensor[0, 0] == pytest.approx(2.0 * 2.0 * abs(a) ** 2 * omega / lattice.volume, rel=1e-12)


class TestTargets:
    def test_vacuum_energy_is_equipartition(self, lattice):
        target = vacuum_emt_target(lattice, Regularizer.kg_vacuum(1.0, kT=0.5), 1.0, 0.5)
        assert target[0, 0] == pytest.approx(lattice.n_modes * 0.5 / 2.0, rel=1e-12)
        assert np.allclose(target[0, 1:], 0.0, atol=1e-12)

    def test_vacuum_pressure_is_isotropic(self, lattice):
        target = vacuum_emt_target(lattice, Regularizer.kg_vacuum(1.0), 1.0, 1.0)
        pressures = np.diag(target)[1:]
        assert np.allclose(pressures, pressures[0], rtol=1e-12)
        assert target[0, 0] > pressures.sum()

    def test_one_particle_adds_energy(self, lattice):
        g = TestFunction.gaussian(0.5, center=(1.5, 1.5, 1.5))
        vacuum = vacuum_emt_target(lattice, Regularizer.kg_vacuum(1.0), 1.0, 1.0)
        excited = one_particle_emt_target(lattice, g, 1.0, 1.0)
        assert excited[0, 0] > vacuum[0, 0]
        assert np.allclose(excited, excited.T)

    @pytest.mark.slow
    def test_ensemble_mean_matches_target(self, lattice):
        reg = Regularizer.kg_vacuum(1.0)
        spec = EnsembleSpec(lattice=lattice, reg=reg, count=2000, seed=11)
        tensors = np.stack([emt_components(config, 1.0, 1.0) for config in sample_vacuum(spec)])
        target = vacuum_emt_target(lattice, reg, 1.0, 1.0)
        for mu in range(4):
            for nu in range(mu, 4):
                assert estimate_mean(tensors[:, mu, nu]).agrees_with(float(target[mu, nu]))

"""Tests for one-particle field ensembles."""

import math

import numpy as np
import pytest
from kgvacuum.analytic.inner_product import lattice_inner_product
from kgvacuum.analytic.weights import SpectralWeight
from kgvacuum.errors import ConfigurationError
from kgvacuum.errors import DegenerateTestFunction
from kgvacuum.sampler.emt import vacuum_emt_target
from kgvacuum.sampler.estimators import estimate_mean
from kgvacuum.sampler.estimators import estimate_moments
from kgvacuum.sampler.observables import smear
from kgvacuum.sampler.one_particle import one_particle_covariance
from kgvacuum.sampler.one_particle import one_particle_direction
from kgvacuum.sampler.one_particle import one_particle_emt_target
from kgvacuum.sampler.one_particle import one_particle_variance
from kgvacuum.sampler.one_particle import sample_one_particle
from kgvacuum.sampler.rng import Stream
from kgvacuum.sampler.rng import sample_generator
from kgvacuum.sampler.rng import signed_maxwell
from kgvacuum.spectral.field import FieldConfiguration
from kgvacuum.spectral.lattice import LatticeSpec
from kgvacuum.spectral.regularizers import Regularizer
from kgvacuum.spectral.test_functions import TestFunction

SEED = 20240917


@pytest.fixture
def lattice():
    return LatticeSpec(n_per_side=8, spacing=0.5)


@pytest.fixture
def g():
    return TestFunction.gaussian(0.6, center=(2.0, 2.0, 2.0))


class TestDirection:
    def test_direction_smears_to_norm(self, lattice, g):
        direction, gg = one_particle_direction(lattice, g, 1.0)
        config = FieldConfiguration(lattice, direction)
        assert config.is_hermitian()
        assert smear(config, g) == pytest.approx(math.sqrt(gg), rel=1e-12)

    def test_norm_matches_lattice_inner_product(self, lattice, g):
        _, gg = one_particle_direction(lattice, g, 1.0, hbar=2.0)
        expected = lattice_inner_product(g, g, lattice, SpectralWeight.quantum(hbar=2.0, mass=1.0)).real
        assert gg == pytest.approx(expected, rel=1e-12)

    def test_massless_refused(self, lattice, g):
        with pytest.raises(ConfigurationError):
            one_particle_direction(lattice, g, 0.0)

    def test_zero_test_function(self, lattice):
        with pytest.raises(DegenerateTestFunction):
            one_particle_direction(lattice, TestFunction.gaussian(1.0, amplitude=0.0), 1.0)


class TestSampleOneParticle:
    def test_g_observable_is_signed_maxwell(self, lattice, g):
        ensemble = sample_one_particle(lattice, 1.0, 1.0, 1.0, g, count=5, seed=SEED)
        _, gg = one_particle_direction(lattice, g, 1.0)
        for index, config in enumerate(ensemble):
            expected = signed_maxwell(sample_generator(SEED, Stream.MAXWELL, index)) * math.sqrt(gg)
            assert smear(config, g) == pytest.approx(expected, rel=1e-9, abs=1e-12)

    def test_samples_are_hermitian(self, lattice, g):
        for config in sample_one_particle(lattice, 1.0, 1.0, 1.0, g, count=3, seed=SEED):
            assert config.is_hermitian()

    def test_count_must_be_positive(self, lattice, g):
        with pytest.raises(ConfigurationError):
            sample_one_particle(lattice, 1.0, 1.0, 1.0, g, count=0, seed=SEED)

    def test_second_moment_along_g(self, lattice, g):
        ensemble = sample_one_particle(lattice, 1.0, 1.0, 1.0, g, count=4000, seed=SEED)
        values = np.array([smear(config, g) for config in ensemble])
        _, gg = one_particle_direction(lattice, g, 1.0)
        assert estimate_mean(values**2).agrees_with(3.0 * gg)

    def test_covariances(self, lattice, g):
        f = TestFunction.gaussian(0.6, center=(2.5, 2.0, 2.0))
        h = TestFunction.box((0.5, 0.5, 0.5), center=(1.5, 2.0, 2.0))
        ensemble = sample_one_particle(lattice, 1.0, 1.0, 1.0, g, count=4000, seed=SEED)
        moments = estimate_moments(ensemble, [f, h])
        assert moments.variance(0).agrees_with(one_particle_variance(f, g, lattice, 1.0))
        assert moments.covariance[0][1].agrees_with(one_particle_covariance(f, h, g, lattice, 1.0))


class TestCovarianceTargets:
    def test_variance_along_g_is_three_norms(self, lattice, g):
        _, gg = one_particle_direction(lattice, g, 1.0)
        assert one_particle_variance(g, g, lattice, 1.0) == pytest.approx(3.0 * gg, rel=1e-12)

    def test_orthogonal_function_keeps_vacuum_variance(self, lattice):
        g = TestFunction.gaussian(0.6).spectral_window(0.0, 3.0)
        f = TestFunction.gaussian(0.6).spectral_window(3.0, 100.0)
        vacuum = lattice_inner_product(f, f, lattice, SpectralWeight.quantum(hbar=1.0, mass=1.0)).real
        assert vacuum > 0.0
        assert one_particle_variance(f, g, lattice, 1.0) == pytest.approx(vacuum, rel=1e-12)

    def test_emt_target_adds_energy(self, lattice, g):
        vacuum = vacuum_emt_target(lattice, Regularizer.kg_vacuum(1.0), 1.0, 1.0)
        excited = one_particle_emt_target(lattice, g, 1.0, 1.0)
        assert excited[0, 0] > vacuum[0, 0]
        assert np.allclose(excited, excited.T)

"""Tests for exact draws from state densities."""

import math

import numpy as np
import pytest
from kgvacuum.errors import ConfigurationError
from kgvacuum.states.densities import cdf
from kgvacuum.states.densities import density_polynomial
from kgvacuum.states.models import StateSpec
from kgvacuum.states.sampling import fit_envelope
from kgvacuum.states.sampling import sample_density
from kgvacuum.verify.ks import ks_test

SEED = 7


def states() -> list[StateSpec]:
    ff = 1.5
    fg = math.sqrt(0.7 * ff)
    return [
        StateSpec.vacuum(ff),
        StateSpec.n_particle(1, ff, 1.0, fg),
        StateSpec.n_particle(2, ff, 1.0, fg),
        StateSpec.n_particle(3, ff, 1.0, fg),
        StateSpec.coherent(ff, 1.0, fg),
        StateSpec.superposition(0.6, 0.8, ff, 1.0, fg),
    ]


class TestSampleDensity:
    @pytest.mark.parametrize("state", states(), ids=lambda s: s.label)
    def test_passes_ks_against_exact_cdf(self, state):
        samples = sample_density(state, 5000, SEED)
        assert samples.shape == (5000,)
        assert ks_test(samples, lambda q: cdf(state, q)).passed

    def test_reproducible(self):
        state = states()[3]
        assert np.array_equal(sample_density(state, 200, SEED), sample_density(state, 200, SEED))
        assert not np.array_equal(sample_density(state, 200, SEED), sample_density(state, 200, SEED + 1))

    def test_count_must_be_positive(self):
        with pytest.raises(ConfigurationError):
            sample_density(states()[0], 0, SEED)

    def test_maxwell_fault_breaks_one_particle(self, monkeypatch):
        state = StateSpec.n_particle(1, 1.0, 1.0, 1.0)
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "maxwell-scale")
        samples = sample_density(state, 5000, SEED)
        assert not ks_test(samples, lambda q: cdf(state, q)).passed


class TestEnvelope:
    def test_envelope_dominates_target(self):
        coefficients, _ = density_polynomial(StateSpec.n_particle(3, 1.0, 1.0, 1.0))
        weights, bound = fit_envelope(tuple(coefficients))
        assert sum(weights) == pytest.approx(1.0)
        assert 1.0 <= bound < 100.0

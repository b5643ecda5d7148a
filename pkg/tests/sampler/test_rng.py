"""Tests for counter-based random streams."""

import numpy as np
import pytest
from kgvacuum.errors import ConfigurationError
from kgvacuum.sampler.rng import SEED_LIMIT
from kgvacuum.sampler.rng import Stream
from kgvacuum.sampler.rng import sample_generator
from kgvacuum.sampler.rng import signed_maxwell


class TestSampleGenerator:
    def test_same_address_same_numbers(self):
        a = sample_generator(42, Stream.VACUUM, 7).standard_normal(5)
        b = sample_generator(42, Stream.VACUUM, 7).standard_normal(5)
        assert np.array_equal(a, b)

    @pytest.mark.parametrize(
        "other",
        [(43, Stream.VACUUM, 7), (42, Stream.MAXWELL, 7), (42, Stream.VACUUM, 8)],
    )
    def test_distinct_addresses_differ(self, other):
        a = sample_generator(42, Stream.VACUUM, 7).standard_normal(5)
        b = sample_generator(*other).standard_normal(5)
        assert not np.array_equal(a, b)

    def test_full_seed_range(self):
        sample_generator(SEED_LIMIT - 1, Stream.STATES, 0).random()

    @pytest.mark.parametrize("seed", [-1, SEED_LIMIT])
    def test_seed_out_of_range(self, seed):
        with pytest.raises(ConfigurationError):
            sample_generator(seed, Stream.VACUUM, 0)

    def test_negative_index(self):
        with pytest.raises(ConfigurationError):
            sample_generator(1, Stream.VACUUM, -1)


class TestSignedMaxwell:
    @pytest.fixture
    def rng(self):
        return sample_generator(2024, Stream.MAXWELL, 0)

    def test_second_moment_is_three(self, rng):
        draws = signed_maxwell(rng, size=200_000)
        assert np.mean(draws**2) == pytest.approx(3.0, abs=0.03)

    def test_symmetric_sign(self, rng):
        draws = signed_maxwell(rng, size=100_000)
        assert abs(np.mean(draws > 0.0) - 0.5) < 0.01

    def test_scalar_draw(self, rng):
        assert isinstance(signed_maxwell(rng), float)

    def test_scale_fault(self, rng, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "maxwell-scale")
        draws = signed_maxwell(rng, size=200_000)
        assert np.mean(draws**2) == pytest.approx(1.0, abs=0.01)

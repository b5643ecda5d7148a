"""Tests for Monte Carlo estimators."""

import math

import numpy as np
import pytest
from kgvacuum.errors import InsufficientSamples
from kgvacuum.sampler.estimators import MCEstimate
from kgvacuum.sampler.estimators import estimate_covariance
from kgvacuum.sampler.estimators import estimate_mean
from kgvacuum.sampler.estimators import excess_kurtosis
from kgvacuum.sampler.estimators import moments_from_values
from pydantic import ValidationError


def leave_one_out_covariance(x, y):
    n = len(x)
    estimates = []
    for i in range(n):
        keep = np.arange(n) != i
        estimates.append(np.cov(x[keep], y[keep], ddof=1)[0, 1])
    estimates = np.array(estimates)
    return (n - 1) / n * np.sum((estimates - estimates.mean()) ** 2)


class TestMCEstimate:
    def test_negative_error_rejected(self):
        with pytest.raises(ValidationError):
            MCEstimate(mean=0.0, std_error=-1.0, count=3)

    def test_deviation(self):
        estimate = MCEstimate(mean=1.0, std_error=0.5, count=10)
        assert estimate.deviation(2.0) == 2.0
        assert estimate.agrees_with(2.0)
        assert not estimate.agrees_with(3.5)

    def test_zero_error_deviation(self):
        exact = MCEstimate(mean=1.0, std_error=0.0, count=2)
        assert exact.deviation(1.0) == 0.0
        assert exact.deviation(1.1) == math.inf


class TestEstimateMean:
    def test_known_values(self):
        estimate = estimate_mean([1.0, 2.0, 3.0, 4.0])
        assert estimate.mean == 2.5
        assert estimate.std_error == pytest.approx(np.std([1, 2, 3, 4], ddof=1) / 2.0)
        assert estimate.count == 4

    def test_single_sample_has_infinite_error(self):
        assert estimate_mean([3.0]).std_error == math.inf

    def test_empty(self):
        with pytest.raises(InsufficientSamples):
            estimate_mean([])


class TestEstimateCovariance:
    def test_matches_numpy_covariance(self):
        rng = np.random.default_rng(1)
        x, y = rng.normal(size=(2, 50))
        assert estimate_covariance(x, y).mean == pytest.approx(np.cov(x, y, ddof=1)[0, 1], rel=1e-12)

    def test_standard_error_is_jackknife(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=30)
        y = 0.5 * x + rng.normal(size=30)
        assert estimate_covariance(x, y).std_error ** 2 == pytest.approx(leave_one_out_covariance(x, y), rel=1e-10)

    def test_two_samples(self):
        estimate = estimate_covariance([0.0, 1.0], [0.0, 2.0])
        assert estimate.mean == pytest.approx(1.0)
        assert estimate.std_error == math.inf

    def test_too_few(self):
        with pytest.raises(InsufficientSamples):
            estimate_covariance([1.0], [2.0])

    def test_unpaired(self):
        with pytest.raises(ValueError):
            estimate_covariance([1.0, 2.0], [1.0, 2.0, 3.0])


class TestExcessKurtosis:
    def test_gaussian_sample(self):
        values = np.random.default_rng(3).normal(size=20_000)
        estimate = excess_kurtosis(values)
        assert estimate.std_error == pytest.approx(math.sqrt(24.0 / 20_000))
        assert estimate.agrees_with(0.0)

    def test_signed_maxwell_is_platykurtic(self):
        rng = np.random.default_rng(4)
        magnitude = np.linalg.norm(rng.normal(size=(20_000, 3)), axis=-1)
        values = np.where(rng.random(20_000) < 0.5, -magnitude, magnitude)
        # E[q⁴]/E[q²]² = 15/9 for chi(3)
        assert excess_kurtosis(values).agrees_with(15.0 / 9.0 - 3.0)

    def test_too_few(self):
        with pytest.raises(InsufficientSamples):
            excess_kurtosis([1.0, 2.0, 3.0])


class TestMomentsFromValues:
    def test_matrix_layout(self):
        rng = np.random.default_rng(6)
        values = rng.normal(size=(100, 3))
        moments = moments_from_values(values)
        assert moments.count == 100
        assert len(moments.means) == 3
        assert moments.covariance[0][2].mean == pytest.approx(moments.covariance[2][0].mean)
        assert moments.variance(1).mean == pytest.approx(np.var(values[:, 1], ddof=1))

    def test_rejects_one_dimensional(self):
        with pytest.raises(InsufficientSamples):
            moments_from_values(np.zeros(5))

"""Tests for the radial-angular spectral quadrature."""

import math

import numpy as np
import pytest
from kgvacuum.analytic.quadrature import QuadratureSpec
from kgvacuum.analytic.quadrature import angular_nodes
from kgvacuum.analytic.quadrature import integrate_spectral
from kgvacuum.analytic.quadrature import shell_average
from kgvacuum.errors import DivergentIntegral
from pydantic import ValidationError


class TestQuadratureSpec:
    def test_defaults(self):
        quad = QuadratureSpec()
        assert quad.k_max == 40.0
        assert quad.rel_tol == 1e-10
        assert quad.resolvable_k == 40.0 * 64

    @pytest.mark.parametrize("rel_tol", [0.0, 1.0, -1e-3])
    def test_rel_tol_range(self, rel_tol):
        with pytest.raises(ValidationError):
            QuadratureSpec(rel_tol=rel_tol)


class TestAngularRule:
    def test_weights_cover_sphere(self):
        _, weights = angular_nodes(16)
        assert weights.sum() == pytest.approx(4.0 * math.pi, rel=1e-14)

    def test_directions_are_unit_vectors(self):
        directions, _ = angular_nodes(8)
        assert np.allclose(np.linalg.norm(directions, axis=-1), 1.0)

    def test_quadratic_average(self):
        # ∫ dΩ z² = 4π/3
        value = shell_average(lambda k: k[:, 2] ** 2, 1.0, 16)
        assert value.real == pytest.approx(4.0 * math.pi / 3.0, rel=1e-13)


class TestIntegrateSpectral:
    def test_gaussian(self):
        value = integrate_spectral(lambda k: np.exp(-np.sum(k * k, axis=-1)), QuadratureSpec(k_max=10.0))
        assert value.real == pytest.approx(1.0 / (8.0 * math.pi**1.5), rel=1e-9)
        assert value.imag == pytest.approx(0.0, abs=1e-15)

    def test_finite_shell(self):
        value = integrate_spectral(lambda k: np.ones(len(k)), QuadratureSpec(), k_lo=1.0, k_hi=2.0)
        assert value.real == pytest.approx(4.0 * math.pi * (8.0 - 1.0) / 3.0 / (2.0 * math.pi) ** 3, rel=1e-10)

    def test_non_decaying_integrand_diverges(self):
        quad = QuadratureSpec(k_max=1.0, angular_order=4, rel_tol=1e-6)
        with pytest.raises(DivergentIntegral):
            integrate_spectral(lambda k: np.ones(len(k)), quad)

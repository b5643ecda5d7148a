"""Tests for the direct-space inner product of separated boxes."""

import pytest
from kgvacuum.analytic.inner_product import inner_product
from kgvacuum.analytic.position_space import position_space_inner_product
from kgvacuum.analytic.quadrature import QuadratureSpec
from kgvacuum.errors import ConfigurationError
from kgvacuum.spectral.test_functions import TestFunction

UNIT_BOX = (0.5, 0.5, 0.5)


class TestPositionSpaceInnerProduct:
    @pytest.mark.parametrize("d", [2.0, 4.0])
    def test_matches_spectral_evaluation(self, d):
        f = TestFunction.box(UNIT_BOX)
        g = TestFunction.box(UNIT_BOX, center=(d, 0.0, 0.0))
        spectral = inner_product(f, g, 1.0, 1.0, QuadratureSpec()).real
        assert position_space_inner_product(f, g, 1.0) == pytest.approx(spectral, rel=1e-5)

    def test_disjoint_supports_still_overlap(self):
        f = TestFunction.box(UNIT_BOX)
        g = TestFunction.box(UNIT_BOX, center=(3.0, 0.0, 0.0))
        assert position_space_inner_product(f, g, 1.0) > 0.0

    def test_overlapping_boxes_refused(self):
        f = TestFunction.box(UNIT_BOX)
        g = TestFunction.box(UNIT_BOX, center=(0.5, 0.0, 0.0))
        with pytest.raises(ConfigurationError):
            position_space_inner_product(f, g, 1.0)

    def test_gaussians_refused(self):
        f = TestFunction.gaussian(1.0)
        with pytest.raises(ConfigurationError):
            position_space_inner_product(f, f, 1.0)

    def test_position_kernel_fault(self, monkeypatch):
        f = TestFunction.box(UNIT_BOX)
        g = TestFunction.box(UNIT_BOX, center=(2.0, 0.0, 0.0))
        clean = position_space_inner_product(f, g, 1.0)
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "position-kernel")
        assert position_space_inner_product(f, g, 1.0) == pytest.approx(1.01 * clean, rel=1e-12)

"""Tests for test-function transforms."""

import math

import numpy as np
import pytest
from kgvacuum.errors import ConfigurationError
from kgvacuum.spectral.lattice import LatticeSpec
from kgvacuum.spectral.lattice import mirror
from kgvacuum.spectral.test_functions import TestFunction
from kgvacuum.spectral.test_functions import testfn_fourier
from pydantic import ValidationError


class TestClosedForms:
    @pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
    def test_gaussian_at_origin(self, s):
        value = testfn_fourier(TestFunction.gaussian(s), (0.0, 0.0, 0.0))
        assert value == pytest.approx((2.0 * math.pi) ** 1.5 * s**3, rel=1e-14)

    def test_shift_theorem(self):
        k = np.array([0.4, -1.1, 0.9])
        x0 = (1.0, 2.0, -0.5)
        centered = testfn_fourier(TestFunction.gaussian(1.0), k)
        shifted = testfn_fourier(TestFunction.gaussian(1.0, center=x0), k)
        assert shifted == pytest.approx(centered * np.exp(-1j * np.dot(k, x0)), rel=1e-13)

    def test_box_at_origin_is_volume(self):
        box = TestFunction.box((0.5, 1.0, 1.5), center=(3.0, 0.0, 0.0))
        assert testfn_fourier(box, (0.0, 0.0, 0.0)) == pytest.approx(1.0 * 2.0 * 3.0)

    def test_gaussian_matches_quadrature(self):
        from scipy import integrate

        s, k = 0.8, 1.3
        # separable: the transform factorizes into three 1-D integrals
        one_d, _ = integrate.quad(lambda x: math.exp(-0.5 * x * x / (s * s)) * math.cos(k * x), -40.0, 40.0)
        full = one_d * ((2.0 * math.pi) ** 0.5 * s) ** 2
        assert testfn_fourier(TestFunction.gaussian(s), (k, 0.0, 0.0)).real == pytest.approx(full, rel=1e-10)

    @pytest.mark.parametrize(
        "tf",
        [
            TestFunction.gaussian(0.7, center=(0.3, -1.0, 2.0)),
            TestFunction.box((0.5, 0.25, 1.0), center=(1.0, 1.0, 0.0), amplitude=-2.0),
        ],
    )
    def test_hermitian_symmetry(self, tf):
        rng = np.random.default_rng(7)
        k = rng.normal(scale=3.0, size=(50, 3))
        assert np.allclose(tf.fourier(-k), np.conj(tf.fourier(k)), rtol=1e-14, atol=1e-300)


class TestSpectralWindow:
    def test_window_masks_outside_shell(self):
        tf = TestFunction.gaussian(1.0).spectral_window(1.0, 2.0)
        assert testfn_fourier(tf, (0.5, 0.0, 0.0)) == 0.0
        assert testfn_fourier(tf, (1.5, 0.0, 0.0)) != 0.0
        assert not tf.is_separable

    def test_invalid_window(self):
        with pytest.raises(ValidationError):
            TestFunction.gaussian(1.0).spectral_window(2.0, 1.0)


class TestTabulated:
    @pytest.fixture
    def lattice(self):
        return LatticeSpec(n_per_side=4, spacing=0.5)

    def test_requires_lattice(self):
        tf = TestFunction.tabulated(np.ones((4, 4, 4)))
        with pytest.raises(ConfigurationError):
            testfn_fourier(tf, (0.0, 0.0, 0.0))

    def test_zero_mode_is_integral(self, lattice):
        tf = TestFunction.tabulated(np.ones(lattice.shape), lattice)
        assert testfn_fourier(tf, (0.0, 0.0, 0.0)) == pytest.approx(lattice.volume)

    def test_fft_matches_direct_sum(self, lattice):
        values = np.random.default_rng(3).normal(size=lattice.shape)
        tf = TestFunction.tabulated(values, lattice)
        on_grid = tf.fourier_on_lattice(lattice)
        k = np.array([2.0 * math.pi / lattice.side_length, 0.0, 0.0])
        assert on_grid[1, 0, 0] == pytest.approx(testfn_fourier(tf, k), rel=1e-12)

    def test_shape_mismatch(self, lattice):
        tf = TestFunction.tabulated(np.ones((3, 3, 3)))
        with pytest.raises(ConfigurationError):
            tf.fourier_on_lattice(lattice)


class TestOnLattice:
    def test_lattice_transform_is_hermitian(self):
        lattice = LatticeSpec(n_per_side=6, spacing=0.5)
        transform = TestFunction.box((0.5, 0.5, 0.5), center=(0.7, 0.0, 0.0)).fourier_on_lattice(lattice)
        assert np.allclose(mirror(transform), np.conj(transform), rtol=0.0, atol=1e-14)

    def test_box_site_values(self):
        lattice = LatticeSpec(n_per_side=4, spacing=1.0)
        values = TestFunction.box((0.5, 0.5, 0.5), amplitude=3.0).on_lattice(lattice)
        assert values[0, 0, 0] == 3.0
        assert np.count_nonzero(values) == 1

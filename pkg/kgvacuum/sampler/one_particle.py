"""Field ensembles whose smeared marginals follow the one-particle density.

A vacuum sample φ is split along the direction u ∝ ℏ/(2ω)·g̃ that the
quantum inner product singles out:

    Z  = φ_g / √(g,g)         standard normal under the vacuum measure
    φ' = φ + (Y - Z)·u,       u = ℏ/(2ω)·g̃ / √(g,g)

with Y a signed chi(3) draw. The component orthogonal to u is left alone,
so φ'_f has characteristic function (1 - θ(f,g)·(f,f)t²)·exp(-(f,f)t²/2).
All inner products are the finite-lattice sums, which keeps that identity
exact at any resolution.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from ..analytic.inner_product import NORM_UNDERFLOW
from ..analytic.inner_product import lattice_inner_product
from ..analytic.weights import SpectralWeight
from ..errors import ConfigurationError
from ..errors import DegenerateTestFunction
from ..spectral.field import FieldConfiguration
from ..spectral.lattice import LatticeSpec
from ..spectral.lattice import wavenumber_grid
from ..spectral.regularizers import Regularizer
from ..spectral.test_functions import TestFunction
from .emt import emt_from_power
from .ensemble import Ensemble
from .ensemble import mode_variance_grid
from .ensemble import vacuum_coefficients
from .rng import Stream
from .rng import check_seed
from .rng import sample_generator
from .rng import signed_maxwell

logger = logging.getLogger(__name__)


def _check_mass(m: float) -> None:
    if m <= 0.0:
        raise ConfigurationError(f"one-particle ensembles need mass > 0 on a lattice, got m={m}")


def one_particle_direction(lattice: LatticeSpec, g: TestFunction, m: float, hbar: float = 1.0) -> tuple[np.ndarray, float]:
    """(u, (g,g)) on the lattice; u is Hermitian with smear(u, g) = √(g,g)."""
    _check_mass(m)
    weight = SpectralWeight.quantum(hbar=hbar, mass=m).on_lattice(lattice)
    g_tilde = g.fourier_on_lattice(lattice)
    gg = float(np.sum(weight * np.abs(g_tilde) ** 2)) / lattice.volume
    if gg < NORM_UNDERFLOW:
        raise DegenerateTestFunction(f"(g,g) = {gg:.3e} underflows on the lattice")
    return weight * g_tilde / math.sqrt(gg), gg


def sample_one_particle(
    lattice: LatticeSpec,
    m: float,
    kT: float,
    hbar: float,
    g: TestFunction,
    count: int,
    seed: int,
    workers: int = 1,
) -> Ensemble:
    """Ensemble of `count` configurations carrying one quantum along g."""
    check_seed(seed)
    if count < 1:
        raise ConfigurationError(f"count must be positive, got {count}")
    reg = Regularizer.kg_vacuum(m, kT=kT, hbar=hbar)
    variance = mode_variance_grid(lattice, reg)
    direction, gg = one_particle_direction(lattice, g, m, hbar)
    conj_g = np.conj(g.fourier_on_lattice(lattice))
    norm = math.sqrt(gg)
    logger.debug(f"one-particle ensemble: {count} samples, (g,g)={gg!r}", extra={"seed": seed})

    def generate(index: int) -> FieldConfiguration:
        coefficients = vacuum_coefficients(lattice, variance, sample_generator(seed, Stream.VACUUM, index))
        z = float(np.sum(coefficients * conj_g).real) / lattice.volume / norm
        y = signed_maxwell(sample_generator(seed, Stream.MAXWELL, index))
        return FieldConfiguration(lattice, coefficients + (y - z) * direction)

    return Ensemble(count, generate, workers=workers)


def one_particle_covariance(
    f: TestFunction, h: TestFunction, g: TestFunction, lattice: LatticeSpec, m: float, hbar: float = 1.0
) -> float:
    """Exact lattice Cov(φ'_f, φ'_h) = (f,h) + 2(f,g)(h,g)/(g,g)."""
    _check_mass(m)
    weight = SpectralWeight.quantum(hbar=hbar, mass=m)
    gg = lattice_inner_product(g, g, lattice, weight).real
    if gg < NORM_UNDERFLOW:
        raise DegenerateTestFunction(f"(g,g) = {gg:.3e} underflows on the lattice")
    fh = lattice_inner_product(f, h, lattice, weight).real
    fg = lattice_inner_product(f, g, lattice, weight).real
    hg = lattice_inner_product(h, g, lattice, weight).real
    return fh + 2.0 * fg * hg / gg


def one_particle_variance(f: TestFunction, g: TestFunction, lattice: LatticeSpec, m: float, hbar: float = 1.0) -> float:
    """(f,f)(1 + 2θ) on the lattice."""
    return one_particle_covariance(f, f, g, lattice, m, hbar)


def one_particle_emt_target(lattice: LatticeSpec, g: TestFunction, m: float, kT: float, hbar: float = 1.0) -> np.ndarray:
    """Ensemble mean of T^{μν}: the vacuum sum with ⟨|φ̃|²⟩ = V·ℏ/(2ω) + 2|u|²."""
    direction, _ = one_particle_direction(lattice, g, m, hbar)
    variance = mode_variance_grid(lattice, Regularizer.kg_vacuum(m, kT=kT, hbar=hbar))
    power = lattice.volume * variance + 2.0 * np.abs(direction) ** 2
    kx, ky, kz = wavenumber_grid(lattice)
    return emt_from_power(power, (kx, ky, kz), lattice.volume, m, kT, hbar)


__all__ = [
    "one_particle_direction",
    "sample_one_particle",
    "one_particle_covariance",
    "one_particle_variance",
    "one_particle_emt_target",
]

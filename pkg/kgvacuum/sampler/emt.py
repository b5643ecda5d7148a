"""Energy-momentum tensor of a classical configuration with on-shell wavenumbers.

    T^{μν}[φ] = (kT/ℏ)·(1/V) Σ_k k^μ k^ν |φ̃(k)|² / ω(k),   k^μ = (ω(k), k)

The ω = 0 mode (m = 0 zero mode) contributes nothing.
"""

from __future__ import annotations

import numpy as np

from ..spectral.field import FieldConfiguration
from ..spectral.lattice import LatticeSpec
from ..spectral.lattice import dispersion
from ..spectral.lattice import wavenumber_grid
from ..spectral.regularizers import Regularizer
from .ensemble import mode_variance_grid


def _four_momenta(k_grids, m: float) -> np.ndarray:
    kx, ky, kz = k_grids
    omega = dispersion(np.stack([kx, ky, kz], axis=-1), m)
    return np.stack([omega, kx, ky, kz])


def emt_from_power(power: np.ndarray, k_grids, volume: float, m: float, kT: float, hbar: float = 1.0) -> np.ndarray:
    """T^{μν} for a grid of mode powers |φ̃(k)|² (or their expectations)."""
    momenta = _four_momenta(k_grids, m)
    omega = momenta[0]
    with np.errstate(divide="ignore", invalid="ignore"):
        density = np.where(omega > 0.0, power / np.where(omega > 0.0, omega, 1.0), 0.0)
    tensor = np.einsum("a...,b...,...->ab", momenta, momenta, density)
    tensor = 0.5 * (tensor + tensor.T)
    return (kT / hbar) * tensor / volume


def emt_components(config: FieldConfiguration, m: float, kT: float, hbar: float = 1.0) -> np.ndarray:
    """Symmetric 4×4 real T^{μν}; T⁰⁰ equals the KgVacuum Hamiltonian of the configuration."""
    lattice = config.lattice
    power = np.abs(config.coefficients) ** 2
    return emt_from_power(power, wavenumber_grid(lattice), lattice.volume, m, kT, hbar)


def vacuum_emt_target(lattice: LatticeSpec, reg: Regularizer, m: float, kT: float, hbar: float = 1.0) -> np.ndarray:
    """Vacuum-ensemble mean of T^{μν}: ⟨|φ̃(k)|²⟩ = V·kT/(2ξ(k)) inserted in the sum."""
    power = lattice.volume * mode_variance_grid(lattice, reg)
    return emt_from_power(power, wavenumber_grid(lattice), lattice.volume, m, kT, hbar)


__all__ = ["emt_from_power", "emt_components", "vacuum_emt_target"]

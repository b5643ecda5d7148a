"""Periodic cubic lattices, their wavenumbers and the continuum dispersion.

Fourier convention: f̃(k) = ∫ f(x) e^{-ik·x} d³x, with the inverse carrying
(2π)^{-3}. On a lattice of volume V the continuum measure d³k/(2π)³ becomes
(1/V) Σ_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

DIMENSIONS = 3


class LatticeSpec(BaseModel):
    """Periodic cubic grid with `n_per_side` sites per axis."""

    model_config = ConfigDict(frozen=True)

    n_per_side: int = Field(ge=2)
    spacing: float = Field(gt=0.0)

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.n_per_side,) * DIMENSIONS

    @property
    def n_modes(self) -> int:
        return self.n_per_side**DIMENSIONS

    @property
    def side_length(self) -> float:
        return self.n_per_side * self.spacing

    @property
    def volume(self) -> float:
        return self.side_length**DIMENSIONS


@dataclass(frozen=True)
class Wavenumbers:
    """All lattice wavenumbers in C order plus the Hermitian pair map.

    `vectors[i]` is the i-th wavenumber; `pair_index[i]` is the index of
    the mode whose wavenumber is `-vectors[i]` modulo the grid.
    """

    vectors: np.ndarray
    pair_index: np.ndarray

    @property
    def self_conjugate(self) -> np.ndarray:
        return self.pair_index == np.arange(len(self.pair_index))


def axis_wavenumbers(lattice: LatticeSpec) -> np.ndarray:
    """Wavenumbers along one axis, 2π·j/(n·spacing) with j in the symmetric range."""
    return 2.0 * np.pi * np.fft.fftfreq(lattice.n_per_side, d=lattice.spacing)


@lru_cache(maxsize=16)
def wavenumber_grid(lattice: LatticeSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Component grids (kx, ky, kz), each of shape `lattice.shape`, FFT ordering."""
    k1 = axis_wavenumbers(lattice)
    grids = np.meshgrid(k1, k1, k1, indexing="ij")
    for grid in grids:
        grid.setflags(write=False)
    return grids[0], grids[1], grids[2]


@lru_cache(maxsize=16)
def wavenumber_magnitude(lattice: LatticeSpec) -> np.ndarray:
    kx, ky, kz = wavenumber_grid(lattice)
    magnitude = np.sqrt(kx**2 + ky**2 + kz**2)
    magnitude.setflags(write=False)
    return magnitude


def mirror(grid: np.ndarray) -> np.ndarray:
    """Return `grid` re-indexed at the negated wavenumber: out[k] = grid[-k]."""
    flipped = np.flip(grid, axis=(0, 1, 2))
    return np.roll(flipped, shift=1, axis=(0, 1, 2))


def wavenumbers(lattice: LatticeSpec) -> Wavenumbers:
    """Enumerate every grid wavenumber and the index of its negation."""
    kx, ky, kz = wavenumber_grid(lattice)
    vectors = np.stack([kx.ravel(), ky.ravel(), kz.ravel()], axis=-1)
    indices = np.arange(lattice.n_modes).reshape(lattice.shape)
    pair_index = mirror(indices).ravel()
    return Wavenumbers(vectors=vectors, pair_index=pair_index)


def lattice_positions(lattice: LatticeSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Site coordinates x = spacing·(i, j, l), matching the FFT phase convention."""
    x1 = lattice.spacing * np.arange(lattice.n_per_side)
    grids = np.meshgrid(x1, x1, x1, indexing="ij")
    return grids[0], grids[1], grids[2]


def dispersion(k, mass: float):
    """Continuum dispersion ω = +√(|k|² + m²) for one vector or an (..., 3) array."""
    k = np.asarray(k, dtype=float)
    omega = np.sqrt(np.sum(k * k, axis=-1) + mass * mass)
    if omega.ndim == 0:
        return float(omega)
    return omega


__all__ = [
    "DIMENSIONS",
    "LatticeSpec",
    "Wavenumbers",
    "axis_wavenumbers",
    "wavenumber_grid",
    "wavenumber_magnitude",
    "mirror",
    "wavenumbers",
    "lattice_positions",
    "dispersion",
]

"""Classical field samples stored as spectral coefficients φ̃(k) on a lattice."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigurationError
from .lattice import LatticeSpec
from .lattice import mirror
from .lattice import wavenumber_magnitude
from .regularizers import Regularizer

logger = logging.getLogger(__name__)

HERMITIAN_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class FieldConfiguration:
    """One classical field sample.

    `coefficients[idx]` is φ̃ at the wavenumber of grid index `idx` (FFT
    ordering). The array is read-only; arithmetic returns new configurations.
    """

    lattice: LatticeSpec
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        if self.coefficients.shape != self.lattice.shape:
            raise ConfigurationError(
                f"coefficients have shape {self.coefficients.shape}, lattice expects {self.lattice.shape}"
            )
        if self.coefficients.flags.writeable or not np.iscomplexobj(self.coefficients):
            frozen = np.array(self.coefficients, dtype=complex)
            frozen.setflags(write=False)
            object.__setattr__(self, "coefficients", frozen)

    @classmethod
    def zeros(cls, lattice: LatticeSpec) -> FieldConfiguration:
        return cls(lattice, np.zeros(lattice.shape, dtype=complex))

    @classmethod
    def single_mode(cls, lattice: LatticeSpec, index: tuple[int, int, int], amplitude: complex) -> FieldConfiguration:
        """Excite one mode and its Hermitian partner (amplitude and its conjugate)."""
        grid = np.zeros(lattice.shape, dtype=complex)
        partner = tuple((-i) % lattice.n_per_side for i in index)
        if partner == tuple(i % lattice.n_per_side for i in index):
            grid[index] = complex(amplitude).real
        else:
            grid[index] = amplitude
            grid[partner] = np.conj(amplitude)
        return cls(lattice, grid)

    @classmethod
    def from_position_space(cls, lattice: LatticeSpec, values: np.ndarray) -> FieldConfiguration:
        """Transform real site values φ(x) to φ̃(k) = spacing³ Σ_x φ(x) e^{-ik·x}."""
        values = np.asarray(values, dtype=float)
        return cls(lattice, lattice.spacing**3 * np.fft.fftn(values))

    def to_position_space(self) -> np.ndarray:
        """φ(x) = (1/V) Σ_k φ̃(k) e^{ik·x}, returned as a real grid."""
        values = np.fft.ifftn(self.coefficients) * self.lattice.n_modes / self.lattice.volume
        return values.real

    def hermitian_residual(self) -> float:
        """max |φ̃(-k) - conj φ̃(k)| relative to max |φ̃|."""
        scale = float(np.max(np.abs(self.coefficients)))
        if scale == 0.0:
            return 0.0
        return float(np.max(np.abs(mirror(self.coefficients) - np.conj(self.coefficients)))) / scale

    def is_hermitian(self, rtol: float = HERMITIAN_RTOL) -> bool:
        return self.hermitian_residual() <= rtol

    def _check_compatible(self, other: FieldConfiguration) -> None:
        if other.lattice != self.lattice:
            raise ConfigurationError("cannot combine field configurations on different lattices")

    def __add__(self, other: FieldConfiguration) -> FieldConfiguration:
        if not isinstance(other, FieldConfiguration):
            return NotImplemented
        self._check_compatible(other)
        return FieldConfiguration(self.lattice, self.coefficients + other.coefficients)

    def __sub__(self, other: FieldConfiguration) -> FieldConfiguration:
        if not isinstance(other, FieldConfiguration):
            return NotImplemented
        self._check_compatible(other)
        return FieldConfiguration(self.lattice, self.coefficients - other.coefficients)

    def __mul__(self, scalar: float) -> FieldConfiguration:
        if not isinstance(scalar, int | float | np.floating | np.integer):
            return NotImplemented
        return FieldConfiguration(self.lattice, self.coefficients * float(scalar))

    __rmul__ = __mul__


def hamiltonian(config: FieldConfiguration, reg: Regularizer) -> float:
    """Discrete H_ξ[φ] = (1/V) Σ_k ξ(k)|φ̃(k)|².

    Frozen modes must carry zero amplitude; they contribute nothing.
    """
    xi, frozen = reg.xi_grid(wavenumber_magnitude(config.lattice))
    power = np.abs(config.coefficients) ** 2
    if np.any(power[frozen] > 0.0):
        raise ConfigurationError("configuration excites a frozen mode (ξ = ∞); its energy is infinite")
    return float(np.sum(xi[~frozen] * power[~frozen]) / config.lattice.volume)


__all__ = ["HERMITIAN_RTOL", "FieldConfiguration", "hamiltonian"]

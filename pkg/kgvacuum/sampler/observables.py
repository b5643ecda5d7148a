"""Smeared observables φ_f = ∫ φ(x) f(x) d³x on lattice configurations."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from collections.abc import Sequence

import numpy as np

from ..errors import HermitianSymmetryError
from ..spectral.field import FieldConfiguration
from ..spectral.lattice import LatticeSpec
from ..spectral.test_functions import TestFunction

logger = logging.getLogger(__name__)

IMAGINARY_RTOL = 1e-10


def _real_part_checked(total: complex, magnitude: float, volume: float) -> float:
    if abs(total.imag) > IMAGINARY_RTOL * magnitude / volume:
        raise HermitianSymmetryError(
            f"smeared value has imaginary residue {total.imag:.3e} (scale {magnitude / volume:.3e}); "
            "configuration or transform is not Hermitian"
        )
    return total.real


def smear(config: FieldConfiguration, f: TestFunction) -> float:
    """Re[(1/V) Σ_k φ̃(k) f̃*(k)], after checking the imaginary residue vanishes."""
    lattice = config.lattice
    terms = config.coefficients * np.conj(f.fourier_on_lattice(lattice))
    total = complex(np.sum(terms)) / lattice.volume
    return _real_part_checked(total, float(np.sum(np.abs(terms))), lattice.volume)


class SmearingPanel:
    """Precomputed conj f̃ for several test functions, applied to many configurations."""

    def __init__(self, fs: Sequence[TestFunction], lattice: LatticeSpec):
        self.lattice = lattice
        self.test_functions = list(fs)
        self._conj_transforms = np.stack(
            [np.conj(f.fourier_on_lattice(lattice)).ravel() for f in self.test_functions]
        )

    def __len__(self) -> int:
        return len(self.test_functions)

    def apply(self, config: FieldConfiguration) -> np.ndarray:
        coefficients = config.coefficients.ravel()
        totals = self._conj_transforms @ coefficients / self.lattice.volume
        magnitudes = np.abs(self._conj_transforms) @ np.abs(coefficients)
        return np.array(
            [
                _real_part_checked(complex(total), float(magnitude), self.lattice.volume)
                for total, magnitude in zip(totals, magnitudes, strict=True)
            ]
        )

    def collect(self, configs: Iterable[FieldConfiguration]) -> np.ndarray:
        """Streamed (n_samples, n_functions) array of smeared values."""
        rows = [self.apply(config) for config in configs]
        if not rows:
            return np.empty((0, len(self)))
        return np.vstack(rows)


__all__ = ["IMAGINARY_RTOL", "smear", "SmearingPanel"]

"""Equilibrium ensembles of the Gibbs measure exp(-H_ξ/kT) on a periodic lattice.

Discrete normalisation: φ(x) = (1/V) Σ_k φ̃(k) e^{ik·x}, V = (n·spacing)³, and
⟨|φ̃(k)|²⟩ = V·kT/(2ξ(k)). Lattice sums (1/V)Σ_k then converge to the
continuum ∫ d³k/(2π)³ as spacing → 0 and n·spacing → ∞.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from collections.abc import Iterator
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import overload

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import field_validator

from ..runtime.faults import fault_active
from ..spectral.field import FieldConfiguration
from ..spectral.lattice import LatticeSpec
from ..spectral.lattice import mirror
from ..spectral.lattice import wavenumber_magnitude
from ..spectral.regularizers import Regularizer
from .rng import Stream
from .rng import check_seed
from .rng import sample_generator

logger = logging.getLogger(__name__)

# mode whose pairing the "hermitian" fault breaks
HERMITIAN_FAULT_MODE = (1, 0, 0)


class EnsembleSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    lattice: LatticeSpec
    reg: Regularizer
    count: int = Field(ge=1)
    seed: int = Field(ge=0)

    @field_validator("seed")
    @classmethod
    def _check_seed(cls, value: int) -> int:
        return check_seed(value)


class Ensemble(Sequence[FieldConfiguration]):
    """Lazy, re-iterable sequence of field configurations.

    Sample i is produced on demand by `generate(i)`; iterating twice, indexing,
    or `materialize()` all yield the same configurations. With `workers > 1`
    iteration generates samples on a thread pool but still yields them in
    index order.
    """

    def __init__(self, count: int, generate: Callable[[int], FieldConfiguration], workers: int = 1):
        self._count = count
        self._generate = generate
        self.workers = max(1, workers)

    def __len__(self) -> int:
        return self._count

    @overload
    def __getitem__(self, index: int) -> FieldConfiguration: ...

    @overload
    def __getitem__(self, index: slice) -> list[FieldConfiguration]: ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self._generate(i) for i in range(*index.indices(self._count))]
        if index < 0:
            index += self._count
        if not 0 <= index < self._count:
            raise IndexError(f"ensemble index {index} out of range")
        return self._generate(index)

    def __iter__(self) -> Iterator[FieldConfiguration]:
        if self.workers == 1:
            for i in range(self._count):
                yield self._generate(i)
            return
        batch = 4 * self.workers
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            for start in range(0, self._count, batch):
                yield from pool.map(self._generate, range(start, min(start + batch, self._count)))

    def materialize(self) -> list[FieldConfiguration]:
        return list(self)


def vacuum_coefficients(lattice: LatticeSpec, variance: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Hermitian-symmetric φ̃ with ⟨|φ̃(k)|²⟩ = V·variance(k).

    The FFT of real white noise has ⟨|W(k)|²⟩ = n³, its pairs split that
    evenly between real and imaginary parts, and self-conjugate modes are
    real. Averaging W with its mirrored conjugate removes FFT roundoff so the
    pairing holds exactly.
    """
    noise = rng.standard_normal(lattice.shape)
    transform = np.fft.fftn(noise)
    transform = 0.5 * (transform + np.conj(mirror(transform)))
    coefficients = transform * np.sqrt(lattice.volume * variance / lattice.n_modes)
    if fault_active("hermitian"):
        coefficients[HERMITIAN_FAULT_MODE] *= np.exp(1j)
    return coefficients


def mode_variance_grid(lattice: LatticeSpec, reg: Regularizer) -> np.ndarray:
    return reg.mode_variance(wavenumber_magnitude(lattice))


def sample_vacuum(spec: EnsembleSpec, workers: int = 1) -> Ensemble:
    variance = mode_variance_grid(spec.lattice, spec.reg)
    logger.debug(
        f"vacuum ensemble: {spec.count} samples on {spec.lattice.n_per_side}³, "
        f"{int(np.count_nonzero(variance))} active modes",
        extra={"seed": spec.seed, "regularizer": str(spec.reg.kind)},
    )

    def generate(index: int) -> FieldConfiguration:
        rng = sample_generator(spec.seed, Stream.VACUUM, index)
        return FieldConfiguration(spec.lattice, vacuum_coefficients(spec.lattice, variance, rng))

    return Ensemble(spec.count, generate, workers=workers)


__all__ = [
    "HERMITIAN_FAULT_MODE",
    "EnsembleSpec",
    "Ensemble",
    "vacuum_coefficients",
    "mode_variance_grid",
    "sample_vacuum",
]

"""Spectral weights w(k) appearing in ∫ d³k/(2π)³ w(k) f̃*(k) g̃(k)."""

from __future__ import annotations

import logging
from enum import StrEnum

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from ..errors import ConfigurationError
from ..runtime.faults import fault_active
from ..spectral.lattice import LatticeSpec
from ..spectral.lattice import wavenumber_magnitude
from ..spectral.regularizers import Regularizer

logger = logging.getLogger(__name__)

VARIANCE_WEIGHT_FAULT_SCALE = 1.01


class WeightKind(StrEnum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"
    UNIT = "unit"


class SpectralWeight(BaseModel):
    """Quantum ℏ/(2ω), classical kT/(2ξ), or the unit weight used for Parseval checks."""

    model_config = ConfigDict(frozen=True)

    kind: WeightKind
    hbar: float = Field(default=1.0, gt=0.0)
    mass: float = Field(default=0.0, ge=0.0)
    regularizer: Regularizer | None = None

    @model_validator(mode="after")
    def _check_regularizer(self) -> SpectralWeight:
        if (self.kind == WeightKind.CLASSICAL) != (self.regularizer is not None):
            raise ValueError("a classical weight needs a regularizer and only a classical weight takes one")
        return self

    @classmethod
    def quantum(cls, hbar: float = 1.0, mass: float = 0.0) -> SpectralWeight:
        return cls(kind=WeightKind.QUANTUM, hbar=hbar, mass=mass)

    @classmethod
    def classical(cls, reg: Regularizer) -> SpectralWeight:
        return cls(kind=WeightKind.CLASSICAL, hbar=reg.hbar, mass=reg.mass, regularizer=reg)

    @classmethod
    def unit(cls) -> SpectralWeight:
        return cls(kind=WeightKind.UNIT)

    @property
    def _fault_scale(self) -> float:
        if self.kind == WeightKind.CLASSICAL and fault_active("variance-weight"):
            return VARIANCE_WEIGHT_FAULT_SCALE
        return 1.0

    @property
    def support_max(self) -> float | None:
        if self.regularizer is not None:
            return self.regularizer.support_max
        return None

    def power_form(self) -> tuple[float, float] | None:
        """(c, p) with w(k) = c·(k² + m²)^(-p), or None."""
        if self.kind == WeightKind.QUANTUM:
            return 0.5 * self.hbar, 0.5
        if self.kind == WeightKind.UNIT:
            return 1.0, 0.0
        form = self.regularizer.power_form()
        if form is None:
            return None
        c, p = form
        return c * self._fault_scale, p

    def evaluate(self, k_magnitude) -> np.ndarray:
        """w at an array of |k|. Frozen modes give 0; ξ = 0 gives +inf."""
        k = np.asarray(k_magnitude, dtype=float)
        if self.kind == WeightKind.UNIT:
            return np.ones_like(k)
        if self.kind == WeightKind.QUANTUM:
            with np.errstate(divide="ignore"):
                return 0.5 * self.hbar / np.sqrt(k * k + self.mass**2)
        xi, frozen = self.regularizer.xi_grid(k)
        with np.errstate(divide="ignore"):
            weight = np.where(frozen, 0.0, self.regularizer.kT / (2.0 * np.where(frozen, 1.0, xi)))
        return weight * self._fault_scale

    def on_lattice(self, lattice: LatticeSpec) -> np.ndarray:
        """w on every lattice wavenumber; refuses an infinite weight (zero mode at m = 0)."""
        weight = self.evaluate(wavenumber_magnitude(lattice))
        if not np.all(np.isfinite(weight)):
            raise ConfigurationError(
                "spectral weight is infinite on the lattice zero mode (m = 0); use mass > 0 for lattice quantities"
            )
        return weight


__all__ = ["VARIANCE_WEIGHT_FAULT_SCALE", "WeightKind", "SpectralWeight"]

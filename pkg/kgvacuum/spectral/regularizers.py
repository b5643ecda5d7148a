"""Spectral weights ξ(k) selecting a Gibbs measure over classical fields.

The Hamiltonian ansatz is H_ξ[φ] = ∫ d³k/(2π)³ ξ(k)|φ̃(k)|², so each mode
carries variance kT/(2ξ(k)). Modes with ξ = ∞ are frozen at zero; they are
reported through the FROZEN sentinel (scalar API) or a boolean mask (array
API), never as a floating-point infinity.
"""

from __future__ import annotations

import logging
import math
from enum import StrEnum

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

POWER_LAW_MIN_ALPHA = 1.5


class RegularizerKind(StrEnum):
    KG_VACUUM = "kg"
    SHARP_CUTOFF = "cutoff"
    EXP_MASS = "expmass"
    POWER_LAW = "power"
    GAUSSIAN_MODEL = "gaussian"


class FrozenMode:
    """Sentinel for ξ = ∞: the mode has zero variance."""

    _instance: FrozenMode | None = None

    def __new__(cls) -> FrozenMode:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "FROZEN"


FROZEN = FrozenMode()


class Regularizer(BaseModel):
    """ξ(k) together with the physical constants it depends on."""

    model_config = ConfigDict(frozen=True)

    kind: RegularizerKind
    mass: float = Field(ge=0.0)
    kT: float = Field(default=1.0, gt=0.0)
    hbar: float = Field(default=1.0, gt=0.0)
    cutoff: float | None = Field(default=None, gt=0.0)
    alpha: float | None = None

    @model_validator(mode="after")
    def _check_variant_parameters(self) -> Regularizer:
        if self.kind in (RegularizerKind.SHARP_CUTOFF, RegularizerKind.EXP_MASS) and self.cutoff is None:
            raise ValueError(f"regularizer '{self.kind}' requires a cutoff Λ")
        if self.kind == RegularizerKind.POWER_LAW:
            if self.alpha is None:
                raise ValueError("power-law regularizer requires an exponent α")
            if self.alpha <= POWER_LAW_MIN_ALPHA:
                raise ValueError(f"power-law exponent must satisfy α > 3/2, got {self.alpha}")
        return self

    @classmethod
    def kg_vacuum(cls, mass: float, kT: float = 1.0, hbar: float = 1.0) -> Regularizer:
        return cls(kind=RegularizerKind.KG_VACUUM, mass=mass, kT=kT, hbar=hbar)

    @classmethod
    def sharp_cutoff(cls, mass: float, cutoff: float, kT: float = 1.0, hbar: float = 1.0) -> Regularizer:
        return cls(kind=RegularizerKind.SHARP_CUTOFF, mass=mass, cutoff=cutoff, kT=kT, hbar=hbar)

    @classmethod
    def exp_mass(cls, mass: float, cutoff: float, kT: float = 1.0, hbar: float = 1.0) -> Regularizer:
        return cls(kind=RegularizerKind.EXP_MASS, mass=mass, cutoff=cutoff, kT=kT, hbar=hbar)

    @classmethod
    def power_law(cls, mass: float, alpha: float, kT: float = 1.0, hbar: float = 1.0) -> Regularizer:
        return cls(kind=RegularizerKind.POWER_LAW, mass=mass, alpha=alpha, kT=kT, hbar=hbar)

    @classmethod
    def gaussian_model(cls, mass: float, kT: float = 1.0, hbar: float = 1.0) -> Regularizer:
        return cls(kind=RegularizerKind.GAUSSIAN_MODEL, mass=mass, kT=kT, hbar=hbar)

    @property
    def support_max(self) -> float | None:
        """Largest |k| with finite ξ, or None when every mode is active."""
        if self.kind == RegularizerKind.SHARP_CUTOFF:
            return self.cutoff
        return None

    def power_form(self) -> tuple[float, float] | None:
        """Return (c, p) when kT/(2ξ) = c·(k² + m²)^(-p), else None."""
        if self.kind == RegularizerKind.KG_VACUUM:
            return 0.5 * self.hbar, 0.5
        if self.kind == RegularizerKind.GAUSSIAN_MODEL:
            return self.kT, 1.0
        if self.kind == RegularizerKind.POWER_LAW:
            assert self.alpha is not None
            return self.kT, self.alpha
        return None

    def xi_grid(self, k_magnitude: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Evaluate ξ on an array of |k|.

        Returns (xi, frozen) where `frozen` marks modes with ξ = ∞; `xi` is
        0.0 at those positions.
        """
        k = np.asarray(k_magnitude, dtype=float)
        k2 = k * k
        m2 = self.mass * self.mass
        frozen = np.zeros(k.shape, dtype=bool)

        if self.kind == RegularizerKind.KG_VACUUM:
            xi = self.kT * np.sqrt(k2 + m2) / self.hbar
        elif self.kind == RegularizerKind.GAUSSIAN_MODEL:
            xi = 0.5 * (k2 + m2)
        elif self.kind == RegularizerKind.SHARP_CUTOFF:
            frozen = k > self.cutoff
            xi = np.where(frozen, 0.0, 0.5 * (k2 + m2))
        elif self.kind == RegularizerKind.EXP_MASS:
            xi = 0.5 * (k2 + m2 * np.exp(k / self.cutoff))
        else:
            xi = 0.5 * (k2 + m2) ** self.alpha
        return xi, frozen

    def mode_variance(self, k_magnitude: np.ndarray) -> np.ndarray:
        """Per-mode variance kT/(2ξ(k)); exactly 0 for frozen modes.

        Raises ConfigurationError where ξ vanishes (e.g. the zero mode at m = 0).
        """
        xi, frozen = self.xi_grid(k_magnitude)
        active = ~frozen
        if np.any(xi[active] <= 0.0):
            raise ConfigurationError(
                f"regularizer '{self.kind}' has ξ = 0 on an active mode (infinite variance); use mass > 0"
            )
        variance = np.zeros_like(xi)
        variance[active] = self.kT / (2.0 * xi[active])
        return variance


def xi_eval(reg: Regularizer, k) -> float | FrozenMode:
    """ξ(k) for a single 3-vector, or FROZEN when ξ = ∞."""
    k = np.asarray(k, dtype=float)
    magnitude = math.sqrt(float(np.dot(k, k)))
    xi, frozen = reg.xi_grid(np.array([magnitude]))
    if frozen[0]:
        return FROZEN
    return float(xi[0])


__all__ = [
    "POWER_LAW_MIN_ALPHA",
    "RegularizerKind",
    "FrozenMode",
    "FROZEN",
    "Regularizer",
    "xi_eval",
]

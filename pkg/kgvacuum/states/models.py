"""State descriptions for single-observable densities (ℏ = 1).

A state is summarised by the inner products the densities depend on:
(f,f) for the observed test function, (g,g) for the mode the state
excites, and their overlap (f,g).
"""

from __future__ import annotations

import logging
from enum import StrEnum

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import field_validator
from pydantic import model_validator

logger = logging.getLogger(__name__)

CAUCHY_SCHWARZ_RTOL = 1e-10


class StateKind(StrEnum):
    VACUUM = "vacuum"
    N_PARTICLE = "n-particle"
    COHERENT = "coherent"
    SUPERPOSITION = "superposition"


class StateSpec(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: StateKind
    ff: float = Field(gt=0.0)
    gg: float = Field(default=1.0, gt=0.0)
    fg: complex = 0j
    n: int | None = None
    u: complex = 0j
    v: complex = 0j

    @field_validator("fg", "u", "v", mode="before")
    @classmethod
    def _as_complex(cls, value) -> complex:
        return complex(value)

    @model_validator(mode="after")
    def _check_state(self) -> StateSpec:
        if self.kind == StateKind.N_PARTICLE and self.n not in (1, 2, 3):
            raise ValueError(f"n-particle states need n in {{1, 2, 3}}, got {self.n}")
        if self.kind != StateKind.N_PARTICLE and self.n is not None:
            raise ValueError("only n-particle states take a particle number")
        if self.kind == StateKind.SUPERPOSITION and self.u == 0 and self.v == 0:
            raise ValueError("superposition needs (u, v) != (0, 0)")
        if abs(self.fg) ** 2 > self.ff * self.gg * (1.0 + CAUCHY_SCHWARZ_RTOL):
            raise ValueError(
                f"|(f,g)|² = {abs(self.fg) ** 2!r} exceeds (f,f)(g,g) = {self.ff * self.gg!r} (Cauchy-Schwarz)"
            )
        return self

    @classmethod
    def vacuum(cls, ff: float) -> StateSpec:
        return cls(kind=StateKind.VACUUM, ff=ff)

    @classmethod
    def n_particle(cls, n: int, ff: float, gg: float, fg: complex) -> StateSpec:
        return cls(kind=StateKind.N_PARTICLE, n=n, ff=ff, gg=gg, fg=fg)

    @classmethod
    def coherent(cls, ff: float, gg: float, fg: complex) -> StateSpec:
        return cls(kind=StateKind.COHERENT, ff=ff, gg=gg, fg=fg)

    @classmethod
    def superposition(cls, u: complex, v: complex, ff: float, gg: float, fg: complex) -> StateSpec:
        return cls(kind=StateKind.SUPERPOSITION, u=u, v=v, ff=ff, gg=gg, fg=fg)

    @property
    def theta(self) -> float:
        return min(1.0, abs(self.fg) ** 2 / (self.ff * self.gg))

    @property
    def label(self) -> str:
        if self.kind == StateKind.N_PARTICLE:
            return f"n{self.n}"
        return str(self.kind)


__all__ = ["CAUCHY_SCHWARZ_RTOL", "StateKind", "StateSpec"]

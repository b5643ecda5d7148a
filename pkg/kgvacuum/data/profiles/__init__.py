"""Bundled verification budget profiles."""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError

from ...analytic.quadrature import QuadratureSpec
from ...errors import ConfigurationError
from ...spectral.lattice import LatticeSpec
from ...spectral.test_functions import TestFunction

logger = logging.getLogger(__name__)

BUDGETS_FILE = Path(__file__).parent / "budgets.yaml"


class EnsembleBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_per_side: int = Field(ge=2)
    spacing: float = Field(gt=0.0)
    samples: int = Field(ge=1)

    @property
    def lattice(self) -> LatticeSpec:
        return LatticeSpec(n_per_side=self.n_per_side, spacing=self.spacing)


class GaussianEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    width: float = Field(gt=0.0)
    center: tuple[float, float, float] = (0.0, 0.0, 0.0)


class BudgetProfile(BaseModel):
    """Sample counts, lattices, seed and tolerances for one verification scale."""

    model_config = ConfigDict(frozen=True)

    name: str
    seed: int = Field(ge=0)
    mass: float = Field(gt=0.0)
    rel_tol: float = Field(gt=0.0, lt=1.0)
    k_max: float = Field(gt=0.0)
    vacuum: EnsembleBudget
    one_particle: EnsembleBudget
    density_samples: int = Field(ge=100)
    workers: int = Field(default=1, ge=1)
    test_functions: list[GaussianEntry] = Field(min_length=1)

    @property
    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(k_max=self.k_max, rel_tol=self.rel_tol)

    def gaussians(self) -> list[TestFunction]:
        return [TestFunction.gaussian(entry.width, entry.center) for entry in self.test_functions]


@lru_cache(maxsize=1)
def _load_budgets() -> dict:
    with open(BUDGETS_FILE, encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def profile_names() -> list[str]:
    return sorted(_load_budgets())


def load_profile(name: str) -> BudgetProfile:
    """Budget profile `name` from the bundled budgets file."""
    budgets = _load_budgets()
    if name not in budgets:
        raise ConfigurationError(f"unknown budget profile '{name}' (available: {', '.join(profile_names())})")
    try:
        return BudgetProfile(name=name, **budgets[name])
    except ValidationError as e:
        raise ConfigurationError(f"budget profile '{name}' is invalid: {e}") from e


__all__ = ["BUDGETS_FILE", "EnsembleBudget", "BudgetProfile", "profile_names", "load_profile"]

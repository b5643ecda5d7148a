"""Monte Carlo estimates of smeared-field moments."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from scipy import stats

from ..errors import InsufficientSamples
from ..spectral.field import FieldConfiguration
from ..spectral.test_functions import TestFunction
from .observables import SmearingPanel

logger = logging.getLogger(__name__)


class MCEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean: float
    std_error: float = Field(ge=0.0)
    count: int = Field(ge=1)

    def deviation(self, target: float) -> float:
        """|mean - target| in units of the standard error."""
        if self.std_error == 0.0:
            return 0.0 if self.mean == target else math.inf
        return abs(self.mean - target) / self.std_error

    def agrees_with(self, target: float, n_sigma: float = 4.0) -> bool:
        return self.deviation(target) <= n_sigma


def estimate_mean(values) -> MCEstimate:
    """Sample mean with standard error std(ddof=1)/√n; a single value has infinite error."""
    array = np.asarray(values, dtype=float)
    n = array.size
    if n == 0:
        raise InsufficientSamples("cannot estimate a mean from zero samples")
    std_error = math.inf if n == 1 else float(np.std(array, ddof=1) / math.sqrt(n))
    return MCEstimate(mean=float(np.mean(array)), std_error=std_error, count=n)


def estimate_covariance(x, y) -> MCEstimate:
    """Unbiased sample covariance with its jackknife standard error.

    With centred products p_i = (x_i - x̄)(y_i - ȳ), the leave-one-out
    covariances deviate from their mean by -n(p_i - p̄)/((n-1)(n-2)), so the
    jackknife variance reduces to n/((n-1)(n-2)²)·Σ(p_i - p̄)².
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    if n != y.size:
        raise ValueError(f"covariance needs paired samples, got {n} and {y.size}")
    if n < 2:
        raise InsufficientSamples(f"covariance needs at least 2 samples, got {n}")
    products = (x - x.mean()) * (y - y.mean())
    covariance = float(products.sum() / (n - 1))
    if n < 3:
        return MCEstimate(mean=covariance, std_error=math.inf, count=n)
    spread = float(np.sum((products - products.mean()) ** 2))
    std_error = math.sqrt(n * spread / ((n - 1) * (n - 2) ** 2))
    return MCEstimate(mean=covariance, std_error=std_error, count=n)


def excess_kurtosis(values) -> MCEstimate:
    """Sample excess kurtosis with the Gaussian-null standard error √(24/n)."""
    array = np.asarray(values, dtype=float)
    n = array.size
    if n < 4:
        raise InsufficientSamples(f"excess kurtosis needs at least 4 samples, got {n}")
    kurtosis = float(stats.kurtosis(array, fisher=True, bias=False))
    return MCEstimate(mean=kurtosis, std_error=math.sqrt(24.0 / n), count=n)


@dataclass(frozen=True)
class MomentEstimates:
    """Per-function means, the pairwise covariance matrix, and the raw smeared values."""

    means: list[MCEstimate]
    covariance: list[list[MCEstimate]]
    values: np.ndarray

    @property
    def count(self) -> int:
        return int(self.values.shape[0])

    def variance(self, index: int) -> MCEstimate:
        return self.covariance[index][index]


def moments_from_values(values: np.ndarray) -> MomentEstimates:
    values = np.asarray(values, dtype=float)
    if values.ndim != 2 or values.shape[0] == 0:
        raise InsufficientSamples("moment estimation needs a nonempty (samples, functions) array")
    n_functions = values.shape[1]
    means = [estimate_mean(values[:, i]) for i in range(n_functions)]
    covariance = [[estimate_covariance(values[:, i], values[:, j]) for j in range(n_functions)] for i in range(n_functions)]
    return MomentEstimates(means=means, covariance=covariance, values=values)


def estimate_moments(ensemble: Iterable[FieldConfiguration], fs: Sequence[TestFunction]) -> MomentEstimates:
    """Smear every configuration against every f, streaming, then estimate moments."""
    iterator = iter(ensemble)
    try:
        first = next(iterator)
    except StopIteration:
        raise InsufficientSamples("cannot estimate moments of an empty ensemble") from None
    panel = SmearingPanel(fs, first.lattice)
    rows = [panel.apply(first)]
    rows.extend(panel.apply(config) for config in iterator)
    logger.debug(f"smeared {len(rows)} configurations against {len(panel)} test functions")
    return moments_from_values(np.vstack(rows))


__all__ = [
    "MCEstimate",
    "MomentEstimates",
    "estimate_mean",
    "estimate_covariance",
    "excess_kurtosis",
    "moments_from_values",
    "estimate_moments",
]

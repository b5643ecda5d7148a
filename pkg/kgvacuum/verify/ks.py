"""One-sample Kolmogorov-Smirnov test with asymptotic critical values."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from typing import NamedTuple

import numpy as np
from scipy import stats

from ..errors import ConfigurationError
from ..errors import InsufficientSamples

logger = logging.getLogger(__name__)

# c(α) in D_crit = c(α)/√n
KS_COEFFICIENTS = {0.01: 1.628, 0.05: 1.358}
MIN_KS_SAMPLES = 100


class KSResult(NamedTuple):
    statistic: float
    critical: float
    passed: bool


def ks_critical(n: int, alpha: float) -> float:
    if alpha not in KS_COEFFICIENTS:
        raise ConfigurationError(f"alpha must be one of {sorted(KS_COEFFICIENTS)}, got {alpha}")
    return KS_COEFFICIENTS[alpha] / math.sqrt(n)


def ks_test(samples, cdf_oracle: Callable[[np.ndarray], np.ndarray], alpha: float = 0.01) -> KSResult:
    """D_n = sup |F_emp - F| against `cdf_oracle`; passes iff D_n < c(α)/√n."""
    samples = np.asarray(samples, dtype=float)
    n = samples.size
    if n < MIN_KS_SAMPLES:
        raise InsufficientSamples(f"KS test needs at least {MIN_KS_SAMPLES} samples, got {n}")
    critical = ks_critical(n, alpha)
    statistic = float(stats.kstest(samples, cdf_oracle).statistic)
    logger.debug(f"KS statistic {statistic:.5f} vs critical {critical:.5f} (n={n}, α={alpha})")
    return KSResult(statistic, critical, statistic < critical)


__all__ = ["KS_COEFFICIENTS", "MIN_KS_SAMPLES", "KSResult", "ks_critical", "ks_test"]

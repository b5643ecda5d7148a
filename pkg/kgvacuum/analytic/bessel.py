"""Modified Bessel functions of the second kind used by the position-space kernels."""

from __future__ import annotations

import numpy as np
from scipy import special

from ..errors import ConfigurationError

# K_n(x) < 1e-305 past this point; reported as exactly zero
UNDERFLOW_ARGUMENT = 700.0


def _bessel_k(order: int, x):
    values = np.asarray(x, dtype=float)
    if np.any(values <= 0.0):
        raise ConfigurationError(f"K_{order}(x) is defined for x > 0 only")
    result = np.where(values > UNDERFLOW_ARGUMENT, 0.0, special.kv(order, np.minimum(values, UNDERFLOW_ARGUMENT)))
    if result.ndim == 0:
        return float(result)
    return result


def bessel_k1(x):
    """K₁(x) for x > 0 (scalar or array); 0.0 beyond x = 700."""
    return _bessel_k(1, x)


def bessel_k2(x):
    """K₂(x) for x > 0 (scalar or array); 0.0 beyond x = 700."""
    return _bessel_k(2, x)


__all__ = ["UNDERFLOW_ARGUMENT", "bessel_k1", "bessel_k2"]

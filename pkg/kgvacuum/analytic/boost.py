"""Lorentz-boosted inner product.

Boosting the on-shell 4-momentum (ω(k), k) along z with rapidity η gives
k' = (k_x, k_y, k_z cosh η + ω sinh η). With the invariant measure
d³k/(2ω) the pulled-back integral

    ℏ ∫ d³k/(2π)³ f̃*(k') g̃(k') / (2ω(k))

equals (f, g) for every η.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from ..errors import ConfigurationError
from ..runtime.faults import fault_active
from ..spectral.lattice import dispersion
from ..spectral.test_functions import TestFunction
from ..spectral.test_functions import TestFunctionKind
from .inner_product import inner_product
from .inner_product import require_resolvable
from .quadrature import QuadratureSpec
from .quadrature import integrate_spectral

logger = logging.getLogger(__name__)


def boost_wavenumbers(k: np.ndarray, rapidity: float, mass: float) -> np.ndarray:
    """Spatial part of the boosted on-shell momentum for an (..., 3) array."""
    omega = dispersion(k, mass)
    boosted = np.array(k, dtype=float, copy=True)
    boosted[..., 2] = k[..., 2] * math.cosh(rapidity) + omega * math.sinh(rapidity)
    return boosted


def boosted_inner_product(
    f: TestFunction, g: TestFunction, rapidity: float, m: float, hbar: float, quad: QuadratureSpec
) -> complex:
    if rapidity == 0.0:
        return inner_product(f, g, m, hbar, quad)
    if m <= 0.0:
        raise ConfigurationError("boosted inner product needs m > 0")
    if TestFunctionKind.TABULATED in (f.kind, g.kind):
        raise ConfigurationError("tabulated test functions cannot be boosted")
    for tf in (f, g):
        require_resolvable(tf, quad)
    boosted_measure = fault_active("boost-measure")

    def integrand(k: np.ndarray) -> np.ndarray:
        k_boosted = boost_wavenumbers(k, rapidity, m)
        omega = dispersion(k_boosted if boosted_measure else k, m)
        return hbar * np.conj(f.fourier(k_boosted)) * g.fourier(k_boosted) / (2.0 * omega)

    value = integrate_spectral(integrand, quad)
    logger.debug(f"boosted (f,g) at η={rapidity:g}: {value!r}")
    return value


__all__ = ["boost_wavenumbers", "boosted_inner_product"]

"""Quadrature settings and the spectral integration rules built on them.

All spectral integrals have the form ∫ d³k/(2π)³ F(k). Radially symmetric
integrands reduce to one adaptive radial quadrature; the general rule is a
product of an adaptive radial rule with Gauss-Legendre nodes in cos ϑ and a
periodic trapezoid in φ.
"""

from __future__ import annotations

import logging
import warnings
from collections.abc import Callable
from collections.abc import Sequence
from functools import lru_cache

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from scipy import integrate

from ..errors import DivergentIntegral
from ..errors import NonConvergent

logger = logging.getLogger(__name__)

TWO_PI_CUBED = (2.0 * np.pi) ** 3

# tail ratio at which successive doublings of k_max stop shrinking
DIVERGENCE_RATIO = 0.99


class QuadratureSpec(BaseModel):
    """Truncation, tolerance and rule orders for every numerical integral."""

    model_config = ConfigDict(frozen=True)

    k_max: float = Field(default=40.0, gt=0.0)
    rel_tol: float = Field(default=1e-10, gt=0.0, lt=1.0)
    angular_order: int = Field(default=64, ge=4)
    max_refinements: int = Field(default=6, ge=0)
    hermite_order: int = Field(default=64, ge=8)
    subdivision_limit: int = Field(default=400, ge=50)

    @property
    def resolvable_k(self) -> float:
        """Largest wavenumber the refinement budget can ever reach."""
        return self.k_max * 2.0**self.max_refinements

    @property
    def inner_tol(self) -> float:
        """Tolerance requested from the underlying adaptive routines."""
        return max(0.01 * self.rel_tol, 1e-13)


def checked_quad(func: Callable[..., float], a: float, b: float, quad: QuadratureSpec, *, scale: float = 0.0, **kwargs) -> float:
    """scipy.integrate.quad with an explicit acceptance test.

    The result is accepted when the error estimate is below
    rel_tol·max(|result|, scale); `scale` lets callers measure cancelling
    integrals against the size of their absolute integrand.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, abserr = integrate.quad(
            func,
            a,
            b,
            epsabs=quad.inner_tol * scale,
            epsrel=quad.inner_tol,
            limit=quad.subdivision_limit,
            **kwargs,
        )
    tolerance = quad.rel_tol * max(abs(value), scale)
    if abserr > tolerance and abserr > 1e-300:
        raise NonConvergent(
            f"quadrature on [{a}, {b}] reached error {abserr:.3e}, tolerance {tolerance:.3e}"
        )
    return value


@lru_cache(maxsize=8)
def angular_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors and weights of the product rule on the sphere (weights sum to 4π)."""
    mu, mu_weights = np.polynomial.legendre.leggauss(order)
    n_phi = 2 * order
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    sin_theta = np.sqrt(1.0 - mu**2)
    directions = np.stack(
        [
            np.outer(sin_theta, np.cos(phi)).ravel(),
            np.outer(sin_theta, np.sin(phi)).ravel(),
            np.repeat(mu, n_phi),
        ],
        axis=-1,
    )
    weights = np.repeat(mu_weights, n_phi) * (2.0 * np.pi / n_phi)
    directions.setflags(write=False)
    weights.setflags(write=False)
    return directions, weights


def shell_average(integrand: Callable[[np.ndarray], np.ndarray], k: float, order: int) -> complex:
    """∫ dΩ F(k n̂) by the product rule."""
    directions, weights = angular_nodes(order)
    return complex(np.dot(weights, integrand(k * directions)))


def _radial_piece(
    integrand: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    breakpoints: Sequence[float],
    quad: QuadratureSpec,
) -> complex:
    if b <= a:
        return 0j

    def shell(k: float) -> np.ndarray:
        value = k * k * shell_average(integrand, k, quad.angular_order) / TWO_PI_CUBED
        return np.array([value.real, value.imag])

    inner = sorted(p for p in breakpoints if a < p < b)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        result, error = integrate.quad_vec(
            shell,
            a,
            b,
            epsabs=1e-300,
            epsrel=quad.inner_tol,
            limit=quad.subdivision_limit,
            points=inner or None,
        )
    value = complex(result[0], result[1])
    if error > quad.rel_tol * abs(value) and error > 1e-300:
        raise NonConvergent(f"radial-angular rule on [{a}, {b}] reached error {error:.3e}")
    return value


def integrate_spectral(
    integrand: Callable[[np.ndarray], np.ndarray],
    quad: QuadratureSpec,
    *,
    k_lo: float = 0.0,
    k_hi: float | None = None,
    breakpoints: Sequence[float] = (),
) -> complex:
    """∫ d³k/(2π)³ F(k) over the shell k_lo ≤ |k| < k_hi with the general product rule.

    `integrand` maps an (N, 3) array of wavenumbers to N complex values.
    With a finite `k_hi` the shell is integrated directly. Otherwise the
    radial range is truncated at k_max and extended by doubling until the
    tail [K, 2K] falls below rel_tol of the running total.
    """
    if k_hi is not None:
        return _radial_piece(integrand, k_lo, k_hi, breakpoints, quad)

    upper = max(quad.k_max, k_lo)
    total = _radial_piece(integrand, k_lo, upper, breakpoints, quad)
    previous_tail: float | None = None
    for refinement in range(quad.max_refinements + 1):
        tail = _radial_piece(integrand, upper, 2.0 * upper, breakpoints, quad)
        total += tail
        logger.debug(
            f"tail test at K={upper:g}: |tail|={abs(tail):.3e}",
            extra={"k_max": upper, "estimate": abs(total)},
        )
        if abs(tail) <= quad.rel_tol * abs(total) or abs(tail) < 1e-300:
            return total
        if previous_tail and refinement >= 2 and abs(tail) / previous_tail >= DIVERGENCE_RATIO:
            raise DivergentIntegral(
                f"spectral integrand does not decay: tail on [{upper:g}, {2 * upper:g}] is not shrinking"
            )
        previous_tail = abs(tail)
        upper *= 2.0
        logger.warning(f"spectral tail above tolerance, extending radial range to {upper:g}")
    raise NonConvergent(f"spectral tail still above rel_tol={quad.rel_tol:g} at k = {upper:g}")


__all__ = [
    "TWO_PI_CUBED",
    "QuadratureSpec",
    "checked_quad",
    "angular_nodes",
    "shell_average",
    "integrate_spectral",
]

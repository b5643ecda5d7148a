"""Probability densities of a smeared field observable q = φ_f (ℏ = 1).

Every density has the form

    ρ(q) = P(z)·φ(z)/√(f,f),   z = (q - μ)/√(f,f)

with φ the standard normal density and P a polynomial of degree ≤ 6.
Writing densities in this shape lets Gauss-Hermite quadrature integrate
them exactly and gives the CDF in closed form.

The two- and three-particle densities are kept unnormalised (masses 2
and 6); `cdf`, `moments` and the samplers divide by the mass.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
from numpy.polynomial import hermite_e
from scipy import special

from ..analytic.quadrature import QuadratureSpec
from ..errors import ConfigurationError
from ..runtime.faults import fault_active
from .models import StateKind
from .models import StateSpec

logger = logging.getLogger(__name__)

SQRT_2PI = math.sqrt(2.0 * math.pi)

DENSITY_MASS_FAULT_SHIFT = 0.05

MAX_MOMENT_ORDER = 6


def density_polynomial(state: StateSpec) -> tuple[np.ndarray, float]:
    """(coefficients of P in ascending powers of z, mean μ)."""
    t = state.theta
    if state.kind == StateKind.VACUUM:
        return np.array([1.0]), 0.0
    if state.kind == StateKind.COHERENT:
        return np.array([1.0]), 2.0 * state.fg.real
    if state.kind == StateKind.N_PARTICLE:
        if state.n == 1:
            return np.array([1.0 - t, 0.0, t]), 0.0
        if state.n == 2:
            constant = 2.0 - 4.0 * t + 3.0 * t**2
            if fault_active("density-mass"):
                constant += DENSITY_MASS_FAULT_SHIFT
            return np.array([constant, 0.0, 4.0 * t - 6.0 * t**2, 0.0, t**2]), 0.0
        return (
            np.array(
                [
                    6.0 - 18.0 * t + 27.0 * t**2 - 15.0 * t**3,
                    0.0,
                    18.0 * t - 54.0 * t**2 + 45.0 * t**3,
                    0.0,
                    9.0 * t**2 - 15.0 * t**3,
                    0.0,
                    t**3,
                ]
            ),
            0.0,
        )
    # u a_g†|0⟩ + v|0⟩
    u, v, fg = state.u, state.v, state.fg
    norm = abs(u) ** 2 * state.gg + abs(v) ** 2
    quadratic = abs(u) ** 2 * abs(fg) ** 2 / (state.ff * norm)
    linear = 2.0 * (np.conj(v) * u * fg).real / norm
    return np.array([1.0 - quadratic, linear / math.sqrt(state.ff), quadratic]), 0.0


def _standardize(state: StateSpec, q) -> tuple[np.ndarray, float]:
    coefficients, mean = density_polynomial(state)
    return (np.asarray(q, dtype=float) - mean) / math.sqrt(state.ff), coefficients


def density(state: StateSpec, q):
    """ρ(q) for a scalar or array q."""
    z, coefficients = _standardize(state, q)
    values = np.polynomial.polynomial.polyval(z, coefficients) * np.exp(-0.5 * z * z) / (SQRT_2PI * math.sqrt(state.ff))
    if np.ndim(values) == 0:
        return float(values)
    return values


@lru_cache(maxsize=16)
def _hermite_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = hermite_e.hermegauss(order)
    return nodes, weights / SQRT_2PI


def _gaussian_expectation(state: StateSpec, values_at_q, quad: QuadratureSpec):
    """∫ h(q) ρ(q) dq via Gauss-Hermite in z; exact for polynomial h of low degree."""
    nodes, weights = _hermite_rule(quad.hermite_order)
    coefficients, mean = density_polynomial(state)
    q = mean + math.sqrt(state.ff) * nodes
    return np.tensordot(values_at_q(q), weights * np.polynomial.polynomial.polyval(nodes, coefficients), axes=([-1], [0]))


def total_mass(state: StateSpec, quad: QuadratureSpec) -> float:
    return float(_gaussian_expectation(state, np.ones_like, quad))


def moments(state: StateSpec, order: int, quad: QuadratureSpec) -> float:
    """∫ q^order ρ(q) dq / total_mass."""
    if not 1 <= order <= MAX_MOMENT_ORDER:
        raise ConfigurationError(f"moment order must be in 1..{MAX_MOMENT_ORDER}, got {order}")
    raw = float(_gaussian_expectation(state, lambda q: q**order, quad))
    return raw / total_mass(state, quad)


def exact_mass(coefficients: np.ndarray) -> float:
    # E[z^n] = (n-1)!! for even n under the standard normal
    return float(sum(c * math.prod(range(n - 1, 0, -2)) for n, c in enumerate(coefficients) if n % 2 == 0))


def _truncated_moments(z: np.ndarray, degree: int) -> list[np.ndarray]:
    """I_n(z) = ∫_{-∞}^z t^n φ(t) dt for n = 0..degree."""
    pdf = np.exp(-0.5 * z * z) / SQRT_2PI
    integrals = [special.ndtr(z), -pdf]
    for n in range(2, degree + 1):
        integrals.append(-(z ** (n - 1)) * pdf + (n - 1) * integrals[n - 2])
    return integrals[: degree + 1]


def cdf(state: StateSpec, q, quad: QuadratureSpec | None = None):
    """Normalised cumulative distribution; exact through the truncated Gaussian moments."""
    z, coefficients = _standardize(state, q)
    with np.errstate(invalid="ignore", over="ignore"):
        integrals = _truncated_moments(np.asarray(z, dtype=float), len(coefficients) - 1)
        total = sum(c * integral for c, integral in zip(coefficients, integrals, strict=True))
    total = np.where(np.isneginf(z), 0.0, np.where(np.isposinf(z), exact_mass(coefficients), total))
    values = np.clip(total / exact_mass(coefficients), 0.0, 1.0)
    if np.ndim(values) == 0:
        return float(values)
    return values


def characteristic_function(state: StateSpec, t, quad: QuadratureSpec) -> np.ndarray:
    """E[e^{itq}] of the normalised density on a grid of t."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    raw = _gaussian_expectation(state, lambda q: np.exp(1j * np.multiply.outer(t, q)), quad)
    return raw / total_mass(state, quad)


def one_particle_characteristic(ff: float, theta: float, t) -> np.ndarray:
    """Closed form (1 - θ·ff·t²)·exp(-ff·t²/2)."""
    t = np.asarray(t, dtype=float)
    return (1.0 - theta * ff * t * t) * np.exp(-0.5 * ff * t * t)


__all__ = [
    "DENSITY_MASS_FAULT_SHIFT",
    "MAX_MOMENT_ORDER",
    "density_polynomial",
    "exact_mass",
    "density",
    "total_mass",
    "moments",
    "cdf",
    "characteristic_function",
    "one_particle_characteristic",
]

"""Position-space kernels of the matched model.

The anti-local operator multiplies φ̃ by ξ(k) = (kT/ℏ)√(k² + m²). Its
kernel, the inverse transform of √(k² + m²), is

    G(r) = -m² K₂(mr) / (2π² r²)        (r > 0)

which is negative away from the origin; `antilocal_kernel` reports the
magnitude KERNEL_CONSTANT·m²·K₂(mr)/r² with KERNEL_CONSTANT = 1/(2π²), in
units kT/ℏ = 1. The constant was fixed against `kernel_oracle`; see
docs/decisions/ADR-0001-antilocal-kernel-constant.md.

The inner product (f, g) has the kernel ℏ m K₁(mr)/(4π² r), the inverse
transform of ℏ/(2√(k² + m²)).
"""

from __future__ import annotations

import logging
import math

import numpy as np

from ..errors import DivergentIntegral
from ..runtime.faults import fault_active
from .bessel import bessel_k1
from .bessel import bessel_k2

logger = logging.getLogger(__name__)

KERNEL_CONSTANT = 1.0 / (2.0 * math.pi**2)
KERNEL_FAULT_SCALE = 1.01


def antilocal_kernel(r, m: float):
    """KERNEL_CONSTANT·m²·K₂(mr)/r² for r > 0, m > 0 (scalar or array in r)."""
    if m <= 0.0:
        raise DivergentIntegral("the anti-local kernel degenerates to a pure power law at m = 0")
    r = np.asarray(r, dtype=float)
    constant = KERNEL_CONSTANT * (KERNEL_FAULT_SCALE if fault_active("kernel-constant") else 1.0)
    value = constant * m * m * bessel_k2(m * r) / (r * r)
    if np.ndim(value) == 0:
        return float(value)
    return value


def inner_product_kernel(r, m: float, hbar: float = 1.0):
    """ℏ·m·K₁(mr)/(4π² r), or ℏ/(4π² r²) at m = 0."""
    r = np.asarray(r, dtype=float)
    if m == 0.0:
        value = hbar / (4.0 * math.pi**2 * r * r)
    else:
        value = hbar * m * bessel_k1(m * r) / (4.0 * math.pi**2 * r)
    if fault_active("position-kernel"):
        value = value * KERNEL_FAULT_SCALE
    if np.ndim(value) == 0:
        return float(value)
    return value


__all__ = ["KERNEL_CONSTANT", "KERNEL_FAULT_SCALE", "antilocal_kernel", "inner_product_kernel"]

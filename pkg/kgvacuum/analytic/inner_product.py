"""Spectral inner products, smeared variances, two-point functions and θ.

Every quantity here is one integral

    ∫ d³k/(2π)³ w(k) f̃*(k) g̃(k)

evaluated by one of three routes:

* Gaussian pairs: the angular integral is sin(k d)/(k d) in closed form and
  only a radial quadrature remains.
* Separable pairs involving a Box, under a weight c·(k² + m²)^(-p):
  (k² + m²)^(-p) = Γ(p)^(-1) ∫ t^(p-1) e^(-t(k² + m²)) dt, and the Gaussian
  factor splits over axes into one-dimensional heat-smoothed overlaps.
* Anything else: the general radial-angular product rule.
"""

from __future__ import annotations

import logging
import math
from enum import StrEnum

import numpy as np
from scipy import special

from ..errors import ConfigurationError
from ..errors import DegenerateTestFunction
from ..errors import DivergentIntegral
from ..errors import NonConvergent
from ..spectral.lattice import LatticeSpec
from ..spectral.test_functions import AxisFactor
from ..spectral.test_functions import TestFunction
from ..spectral.test_functions import TestFunctionKind
from .quadrature import QuadratureSpec
from .quadrature import checked_quad
from .quadrature import integrate_spectral
from .weights import SpectralWeight

logger = logging.getLogger(__name__)

# test functions whose spectral scale times this factor exceeds the
# quadrature's reachable k are treated as point-like
RESOLUTION_FACTOR = 10.0

# exp(-x) underflows past this
EXP_UNDERFLOW = 745.0

NORM_UNDERFLOW = 1e-280

WIDE_KERNEL_RATIO = 4.0
WIDE_KERNEL_NODES = 16


def _spectral_scale(tf: TestFunction) -> float | None:
    if tf.window is not None:
        return None
    if tf.kind == TestFunctionKind.GAUSSIAN:
        return 1.0 / tf.width
    if tf.kind == TestFunctionKind.BOX:
        return 1.0 / min(tf.half_widths)
    return None


def require_resolvable(tf: TestFunction, quad: QuadratureSpec) -> None:
    """Raise DivergentIntegral when `tf` is too narrow for `quad` to resolve."""
    scale = _spectral_scale(tf)
    if scale is not None and RESOLUTION_FACTOR * scale > quad.resolvable_k:
        raise DivergentIntegral(
            f"test function is point-like at this resolution (spectral scale {scale:.3g}, "
            f"reachable k {quad.resolvable_k:.3g}); the variance at a point is infinite"
        )


def _window_range(f: TestFunction, g: TestFunction, weight: SpectralWeight) -> tuple[float, float | None]:
    lo, hi = 0.0, None
    for window in (f.window, g.window):
        if window is not None:
            lo = max(lo, window[0])
            hi = window[1] if hi is None else min(hi, window[1])
    if weight.support_max is not None:
        hi = weight.support_max if hi is None else min(hi, weight.support_max)
    return lo, hi


# one-dimensional overlaps ∫∫ f_i(x) g_i(y) N(x - y; 0, 2t) dx dy, unit amplitude


def _box_cdf_integral(u: np.ndarray, sigma: float) -> np.ndarray:
    """∫_{-∞}^{u} Φ(v/σ) dv."""
    z = u / sigma
    return u * special.ndtr(z) + sigma * np.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)


def _gauss_gauss(a: AxisFactor, b: AxisFactor, t: float) -> float:
    total = a.scale**2 + b.scale**2 + 2.0 * t
    d = a.center - b.center
    return 2.0 * math.pi * a.scale * b.scale * math.exp(-0.5 * d * d / total) / math.sqrt(2.0 * math.pi * total)


def _box_gauss(box: AxisFactor, gauss: AxisFactor, t: float) -> float:
    tau = math.sqrt(gauss.scale**2 + 2.0 * t)
    lo = (box.lower - gauss.center) / tau
    hi = (box.upper - gauss.center) / tau
    if lo > 0.0:
        mass = special.ndtr(-lo) - special.ndtr(-hi)
    else:
        mass = special.ndtr(hi) - special.ndtr(lo)
    return math.sqrt(2.0 * math.pi) * gauss.scale * float(mass)


def _box_box(a: AxisFactor, b: AxisFactor, t: float) -> float:
    if a.center > b.center:
        a = AxisFactor(a.kind, -a.center, a.scale)
        b = AxisFactor(b.kind, -b.center, b.scale)
    if t == 0.0:
        return max(0.0, min(a.upper, b.upper) - max(a.lower, b.lower))
    sigma = math.sqrt(2.0 * t)
    span = max(a.upper, b.upper) - min(a.lower, b.lower)
    if sigma >= WIDE_KERNEL_RATIO * span:
        nodes, weights = np.polynomial.legendre.leggauss(WIDE_KERNEL_NODES)
        x = a.center + a.scale * nodes
        y = b.center + b.scale * nodes
        diff = x[:, None] - y[None, :]
        kernel = np.exp(-0.5 * (diff / sigma) ** 2) / (sigma * math.sqrt(2.0 * math.pi))
        return float(a.scale * b.scale * weights @ kernel @ weights)
    u = np.array([a.upper - b.lower, a.upper - b.upper, a.lower - b.lower, a.lower - b.upper])
    psi = _box_cdf_integral(u, sigma)
    return float(psi[0] - psi[1] - psi[2] + psi[3])


def axis_overlap(a: AxisFactor, b: AxisFactor, t: float) -> float:
    kinds = {a.kind, b.kind}
    if kinds == {TestFunctionKind.GAUSSIAN}:
        return _gauss_gauss(a, b, t)
    if kinds == {TestFunctionKind.BOX}:
        return _box_box(a, b, t)
    if a.kind == TestFunctionKind.BOX:
        return _box_gauss(a, b, t)
    return _box_gauss(b, a, t)


def _proper_time_overlap(
    f: TestFunction, g: TestFunction, c: float, p: float, mass: float, quad: QuadratureSpec
) -> float:
    factors = list(zip(f.axis_factors(), g.axis_factors(), strict=True))
    amplitude = c * f.amplitude * g.amplitude

    def heat_overlap(t: float) -> float:
        product = 1.0
        for a, b in factors:
            product *= axis_overlap(a, b, t)
        return product

    if p == 0.0:
        return amplitude * heat_overlap(0.0)
    if mass == 0.0 and p >= 1.5:
        raise DivergentIntegral(f"weight (k²)^(-{p:g}) is not integrable at k = 0 when m = 0")

    m2 = mass * mass
    # t = u² on [0, 1] keeps the √t terms of box overlaps smooth
    near = checked_quad(
        lambda u: 2.0 * math.exp(-u * u * m2) * heat_overlap(u * u),
        0.0,
        1.0,
        quad,
        weight="alg",
        wvar=(2.0 * p - 1.0, 0.0),
    )
    far = checked_quad(lambda t: t ** (p - 1.0) * math.exp(-t * m2) * heat_overlap(t), 1.0, math.inf, quad)
    logger.debug(f"proper-time overlap: near={near:.6e} far={far:.6e} (p={p:g}, m={mass:g})")
    return amplitude * (near + far) / math.gamma(p)


def _gaussian_pair_overlap(
    f: TestFunction, g: TestFunction, weight: SpectralWeight, lo: float, hi: float | None, quad: QuadratureSpec
) -> float:
    spread = f.width**2 + g.width**2
    cap = math.sqrt(2.0 * EXP_UNDERFLOW / spread)
    upper = cap if hi is None else min(hi, cap)
    if upper <= lo:
        return 0.0
    d = math.dist(f.center, g.center)
    prefactor = f.amplitude * g.amplitude * (2.0 * math.pi) ** 3 * f.width**3 * g.width**3 / (2.0 * math.pi**2)
    breakpoints = [p for p in (weight.support_max,) if p is not None and lo < p < upper]

    def radial(k: float, separation: float) -> float:
        w = float(weight.evaluate(k))
        return k * k * w * math.exp(-0.5 * spread * k * k) * float(np.sinc(k * separation / math.pi))

    scale = 0.0
    if d > 0.0:
        scale = abs(checked_quad(lambda k: radial(k, 0.0), lo, upper, quad, points=breakpoints or None))
    value = checked_quad(lambda k: radial(k, d), lo, upper, quad, scale=scale, points=breakpoints or None)
    return prefactor * value


def _general_overlap(
    f: TestFunction, g: TestFunction, weight: SpectralWeight, lo: float, hi: float | None, quad: QuadratureSpec
) -> complex:
    def integrand(k: np.ndarray) -> np.ndarray:
        magnitude = np.sqrt(np.sum(k * k, axis=-1))
        return weight.evaluate(magnitude) * np.conj(f.fourier(k)) * g.fourier(k)

    breakpoints = [p for p in (f.window or ()) + (g.window or ()) if p > lo]
    return integrate_spectral(integrand, quad, k_lo=lo, k_hi=hi, breakpoints=breakpoints)


class Route(StrEnum):
    RADIAL = "radial"
    PROPER_TIME = "proper-time"
    GENERAL = "general"


def choose_route(f: TestFunction, g: TestFunction, weight: SpectralWeight) -> Route:
    if f.kind == TestFunctionKind.GAUSSIAN and g.kind == TestFunctionKind.GAUSSIAN:
        return Route.RADIAL
    if weight.power_form() is not None and f.is_separable and g.is_separable:
        return Route.PROPER_TIME
    return Route.GENERAL


def spectral_overlap(
    f: TestFunction,
    g: TestFunction,
    weight: SpectralWeight,
    quad: QuadratureSpec,
    route: Route | None = None,
) -> complex:
    """∫ d³k/(2π)³ w(k) f̃*(k) g̃(k) in the continuum.

    `route` forces an evaluation route (cross-checks); by default the
    cheapest exact one applicable to the pair is used.
    """
    for tf in (f, g):
        if tf.kind == TestFunctionKind.TABULATED:
            raise ConfigurationError("tabulated test functions have lattice transforms only; use lattice_inner_product")
        require_resolvable(tf, quad)

    lo, hi = _window_range(f, g, weight)
    if hi is not None and hi <= lo:
        return 0j

    route = route or choose_route(f, g, weight)
    logger.debug(f"spectral overlap via {route} route ({f.kind}, {g.kind}, {weight.kind})")
    if route == Route.RADIAL:
        if f.kind != TestFunctionKind.GAUSSIAN or g.kind != TestFunctionKind.GAUSSIAN:
            raise ConfigurationError("the radial route needs a pair of Gaussian test functions")
        return complex(_gaussian_pair_overlap(f, g, weight, lo, hi, quad))
    if route == Route.PROPER_TIME:
        form = weight.power_form()
        if form is None or not (f.is_separable and g.is_separable):
            raise ConfigurationError("the proper-time route needs a power-form weight and separable test functions")
        c, p = form
        return complex(_proper_time_overlap(f, g, c, p, weight.mass, quad))

    return _general_overlap(f, g, weight, lo, hi, quad)


def inner_product(f: TestFunction, g: TestFunction, m: float, hbar: float, quad: QuadratureSpec) -> complex:
    """(f, g) = ℏ ∫ d³k/(2π)³ f̃*(k) g̃(k) / (2√(k² + m²))."""
    return spectral_overlap(f, g, SpectralWeight.quantum(hbar=hbar, mass=m), quad)


def connected_two_point(f: TestFunction, g: TestFunction, m: float, hbar: float, quad: QuadratureSpec) -> complex:
    """⟨φ_f φ_g⟩ of the vacuum; the only non-vanishing connected correlation."""
    return inner_product(f, g, m, hbar, quad)


def smeared_variance(f: TestFunction, weight: SpectralWeight, quad: QuadratureSpec) -> float:
    """σ² = ∫ d³k/(2π)³ w(k)|f̃(k)|²."""
    return spectral_overlap(f, f, weight, quad).real


def theta(f: TestFunction, g: TestFunction, m: float, hbar: float, quad: QuadratureSpec) -> float:
    """θ = |(f,g)|² / ((f,f)(g,g)), clamped to [0, 1] within rel_tol."""
    ff = inner_product(f, f, m, hbar, quad).real
    gg = inner_product(g, g, m, hbar, quad).real
    if ff < NORM_UNDERFLOW or gg < NORM_UNDERFLOW:
        raise DegenerateTestFunction(f"test-function norm underflows: (f,f)={ff:.3e}, (g,g)={gg:.3e}")
    fg = inner_product(f, g, m, hbar, quad)
    return overlap_ratio(fg, ff, gg, quad.rel_tol)


def overlap_ratio(fg: complex, ff: float, gg: float, rel_tol: float) -> float:
    """|fg|²/(ff·gg) with Cauchy-Schwarz enforced to `rel_tol`."""
    value = abs(fg) ** 2 / (ff * gg)
    if value > 1.0:
        if value > 1.0 + rel_tol:
            raise NonConvergent(f"Cauchy-Schwarz violated: θ = {value!r} exceeds 1 by more than {rel_tol:g}")
        logger.warning(f"clamping θ = {value!r} to 1")
        value = 1.0
    return value


def lattice_inner_product(f: TestFunction, g: TestFunction, lattice: LatticeSpec, weight: SpectralWeight) -> complex:
    """(1/V) Σ_k w(k) f̃*(k) g̃(k) over the lattice wavenumbers."""
    w = weight.on_lattice(lattice)
    total = np.sum(w * np.conj(f.fourier_on_lattice(lattice)) * g.fourier_on_lattice(lattice))
    return complex(total) / lattice.volume


def lattice_variance(f: TestFunction, lattice: LatticeSpec, weight: SpectralWeight) -> float:
    return lattice_inner_product(f, f, lattice, weight).real


__all__ = [
    "Route",
    "choose_route",
    "require_resolvable",
    "axis_overlap",
    "spectral_overlap",
    "inner_product",
    "connected_two_point",
    "smeared_variance",
    "theta",
    "overlap_ratio",
    "lattice_inner_product",
    "lattice_variance",
]

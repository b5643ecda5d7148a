"""Direct-space evaluation of (f, g) for separated Box test functions.

(f, g) = ∫∫ f(x) K(|x - y|) g(y) d³x d³y = ∫ K(|u|) C(u) d³u with
C(u) = ∫ f(x) g(x - u) d³x. For boxes C factorises into per-axis overlap
lengths, which are piecewise linear in u_i; Gauss-Legendre on each linear
piece integrates them exactly, leaving only the smooth kernel to resolve.
"""

from __future__ import annotations

import logging

import numpy as np

from ..errors import ConfigurationError
from ..spectral.test_functions import TestFunction
from ..spectral.test_functions import TestFunctionKind
from .kernel import inner_product_kernel

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 24


def _axis_rule(a_lo: float, a_hi: float, b_lo: float, b_hi: float, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes u and weights L(u)·du for L(u) = |[a_lo, a_hi] ∩ [b_lo + u, b_hi + u]|."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    kinks = sorted({a_lo - b_hi, a_lo - b_lo, a_hi - b_hi, a_hi - b_lo})
    u_all, w_all = [], []
    for left, right in zip(kinks[:-1], kinks[1:], strict=False):
        if right <= left:
            continue
        half = 0.5 * (right - left)
        u = left + half * (nodes + 1.0)
        length = np.maximum(0.0, np.minimum(a_hi, b_hi + u) - np.maximum(a_lo, b_lo + u))
        u_all.append(u)
        w_all.append(half * weights * length)
    return np.concatenate(u_all), np.concatenate(w_all)


def position_space_inner_product(
    f: TestFunction, g: TestFunction, m: float, hbar: float = 1.0, order: int = DEFAULT_ORDER
) -> float:
    """(f, g) by quadrature of the position-space kernel; boxes with disjoint supports only."""
    if f.kind != TestFunctionKind.BOX or g.kind != TestFunctionKind.BOX or f.window or g.window:
        raise ConfigurationError("position-space inner product is implemented for unwindowed Box pairs")

    rules = []
    separated = False
    for a, b in zip(f.axis_factors(), g.axis_factors(), strict=True):
        if a.upper <= b.lower or b.upper <= a.lower:
            separated = True
        rules.append(_axis_rule(a.lower, a.upper, b.lower, b.upper, order))
    if not separated:
        raise ConfigurationError("position-space inner product needs boxes with disjoint supports")

    (ux, wx), (uy, wy), (uz, wz) = rules
    gx, gy, gz = np.meshgrid(ux, uy, uz, indexing="ij")
    r = np.sqrt(gx**2 + gy**2 + gz**2)
    kernel = inner_product_kernel(r, m, hbar)
    total = np.einsum("i,j,k,ijk->", wx, wy, wz, kernel)
    logger.debug(f"position-space (f,g) over {r.size} nodes: {total!r}")
    return float(f.amplitude * g.amplitude * total)


__all__ = ["DEFAULT_ORDER", "position_space_inner_product"]

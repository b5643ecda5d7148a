"""Closed-form and quadrature evaluation of inner products, variances and kernels."""

from .bessel import bessel_k1
from .bessel import bessel_k2
from .boost import boosted_inner_product
from .inner_product import Route
from .inner_product import connected_two_point
from .inner_product import inner_product
from .inner_product import lattice_inner_product
from .inner_product import lattice_variance
from .inner_product import smeared_variance
from .inner_product import spectral_overlap
from .inner_product import theta
from .kernel import KERNEL_CONSTANT
from .kernel import antilocal_kernel
from .kernel import inner_product_kernel
from .oracles import kernel_oracle
from .position_space import position_space_inner_product
from .quadrature import QuadratureSpec
from .weights import SpectralWeight
from .weights import WeightKind

__all__ = [
    "bessel_k1",
    "bessel_k2",
    "boosted_inner_product",
    "Route",
    "connected_two_point",
    "inner_product",
    "lattice_inner_product",
    "lattice_variance",
    "smeared_variance",
    "spectral_overlap",
    "theta",
    "KERNEL_CONSTANT",
    "antilocal_kernel",
    "inner_product_kernel",
    "kernel_oracle",
    "position_space_inner_product",
    "QuadratureSpec",
    "SpectralWeight",
    "WeightKind",
]

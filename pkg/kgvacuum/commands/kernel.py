"""Anti-local kernel curve."""

import click
import numpy as np

from ..analytic.kernel import KERNEL_CONSTANT
from ..analytic.kernel import antilocal_kernel
from ..analytic.oracles import bessel_k_asymptotic
from ..analytic.oracles import bessel_k_series
from ..analytic.oracles import kernel_oracle
from ..analytic.quadrature import QuadratureSpec
from ..errors import ConfigurationError
from .output import output_option
from .output import quadrature_options
from .output import write_csv

# past this argument the ascending series loses digits to cancellation
SERIES_LIMIT = 8.0


def bessel_reference(r: float, m: float) -> float:
    """C·m²·K₂(mr)/r² with K₂ from the independent series or asymptotic expansion."""
    x = m * r
    k2 = bessel_k_series(2, x) if x <= SERIES_LIMIT else bessel_k_asymptotic(2, x)
    return KERNEL_CONSTANT * m * m * k2 / (r * r)


@click.command()
@click.option("--mass", "-m", type=float, required=True, help="Field mass m (> 0).")
@click.option("--rmin", type=float, default=0.5, show_default=True)
@click.option("--rmax", type=float, default=10.0, show_default=True)
@click.option("--points", type=click.IntRange(min=2), default=40, show_default=True)
@click.option("--oracle/--no-oracle", default=False, help="Add the ε-extrapolated radial-transform column.")
@quadrature_options
@output_option
@click.pass_context
def kernel(ctx, mass, rmin, rmax, points, oracle, k_max, rel_tol, output):
    """Print the kernel C·m²·K₂(mr)/r² of the anti-local operator on a radius grid."""
    if not 0.0 < rmin < rmax:
        raise ConfigurationError(f"need 0 < rmin < rmax, got rmin={rmin}, rmax={rmax}")
    radii = np.linspace(rmin, rmax, points)
    values = antilocal_kernel(radii, mass)
    quad = QuadratureSpec(k_max=k_max, rel_tol=rel_tol)

    header = ["r", "kernel", "bessel_reference"] + (["oracle"] if oracle else [])
    rows = []
    for r, value in zip(radii, values, strict=True):
        row = [float(r), float(value), bessel_reference(float(r), mass)]
        if oracle:
            row.append(kernel_oracle(float(r), mass, quad))
        rows.append(row)
    write_csv(ctx, header, rows, output)

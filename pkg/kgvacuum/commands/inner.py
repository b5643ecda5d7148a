"""Invariant inner products between two test functions."""

import click

from ..analytic.boost import boosted_inner_product
from ..analytic.inner_product import NORM_UNDERFLOW
from ..analytic.inner_product import inner_product
from ..analytic.inner_product import overlap_ratio
from ..analytic.quadrature import QuadratureSpec
from ..errors import DegenerateTestFunction
from .grammar import parse_test_function
from .output import output_option
from .output import quadrature_options
from .output import write_csv


@click.command()
@click.option("--mass", "-m", type=click.FloatRange(min=0.0), required=True, help="Field mass m.")
@click.option("--hbar", type=float, default=1.0, show_default=True, help="Reduced Planck constant ℏ.")
@click.option("--f", "f_text", required=True, help="First test function.")
@click.option("--g", "g_text", required=True, help="Second test function.")
@click.option("--rapidity", type=float, default=None, help="Also report (f,g) with both functions boosted along z.")
@quadrature_options
@output_option
@click.pass_context
def inner(ctx, mass, hbar, f_text, g_text, rapidity, k_max, rel_tol, output):
    """Print (f,f), (g,g), (f,g) and θ."""
    quad = QuadratureSpec(k_max=k_max, rel_tol=rel_tol)
    f = parse_test_function(f_text)
    g = parse_test_function(g_text)

    ff = inner_product(f, f, mass, hbar, quad).real
    gg = inner_product(g, g, mass, hbar, quad).real
    if min(ff, gg) < NORM_UNDERFLOW:
        raise DegenerateTestFunction(f"test-function norm underflows: (f,f)={ff:.3e}, (g,g)={gg:.3e}")
    fg = inner_product(f, g, mass, hbar, quad)
    rows = [
        ("ff", ff),
        ("gg", gg),
        ("fg_real", fg.real),
        ("fg_imag", fg.imag),
        ("theta", overlap_ratio(fg, ff, gg, rel_tol)),
    ]
    if rapidity is not None:
        boosted = boosted_inner_product(f, g, rapidity, mass, hbar, quad)
        rows += [("boosted_fg_real", boosted.real), ("boosted_fg_imag", boosted.imag)]
    write_csv(ctx, ("quantity", "value"), rows, output)

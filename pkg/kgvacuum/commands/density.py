"""Single-observable probability density curves."""

import math

import click
import numpy as np

from ..analytic.quadrature import QuadratureSpec
from ..errors import ConfigurationError
from ..states.densities import density as density_at
from ..states.densities import density_polynomial
from ..states.densities import total_mass
from .grammar import parse_complex
from .grammar import parse_state
from .output import output_option
from .output import write_csv


@click.command()
@click.option("--state", "-s", default="vacuum", show_default=True, help="vacuum, n:1|2|3, coherent or superposition:ur=..,ui=..,vr=..,vi=..")
@click.option("--ff", type=click.FloatRange(min=0.0, min_open=True), default=1.0, show_default=True, help="(f,f) of the observed test function.")
@click.option("--gg", type=click.FloatRange(min=0.0, min_open=True), default=1.0, show_default=True, help="(g,g) of the excited mode.")
@click.option("--fg", default=None, help="Overlap (f,g) as a complex number, e.g. 0.3+0.1j.")
@click.option("--theta", type=click.FloatRange(0.0, 1.0), default=None, help="θ instead of --fg; takes (f,g) = √(θ·ff·gg).")
@click.option("--points", type=click.IntRange(min=2), default=201, show_default=True)
@click.option("--span", type=click.FloatRange(min=0.0, min_open=True), default=8.0, show_default=True, help="Half-width of the grid in units of √(f,f).")
@output_option
@click.pass_context
def density(ctx, state, ff, gg, fg, theta, points, span, output):
    """Print the density ρ(q) of one smeared observable on a grid around its mean."""
    if fg is not None and theta is not None:
        raise ConfigurationError("--fg and --theta are mutually exclusive")
    if theta is not None:
        overlap = complex(math.sqrt(theta * ff * gg))
    else:
        overlap = parse_complex(fg) if fg is not None else 0j
    spec = parse_state(state, ff, gg, overlap)

    _, mean = density_polynomial(spec)
    half_width = span * math.sqrt(ff)
    grid = np.linspace(mean - half_width, mean + half_width, points)
    values = density_at(spec, grid)
    mass = total_mass(spec, QuadratureSpec())
    write_csv(
        ctx,
        ("q", "density"),
        ((float(q), float(rho)) for q, rho in zip(grid, values, strict=True)),
        output,
        results={"state": spec.label, "theta": spec.theta, "total_mass": mass},
    )

"""Smeared-field variance for a test function."""

import click

from ..analytic.inner_product import smeared_variance
from ..analytic.quadrature import QuadratureSpec
from ..analytic.weights import SpectralWeight
from .grammar import parse_regularizer
from .grammar import parse_test_function
from .output import output_option
from .output import physics_options
from .output import quadrature_options
from .output import write_csv


@click.command()
@physics_options
@click.option("--xi", default="kg", show_default=True, help="Regularizer: kg, gaussian, cutoff:L=.., expmass:L=.., power:a=..")
@click.option("--testfn", "-f", required=True, help="Test function, e.g. gaussian:s=1 or box:hx=.5,hy=.5,hz=.5")
@click.option(
    "--weight",
    type=click.Choice(["classical", "quantum"]),
    default="classical",
    show_default=True,
    help="Spectral weight kT/(2ξ) or ℏ/(2ω).",
)
@click.option("--compare/--no-compare", default=False, help="Also report the quantum/classical pair and their difference.")
@quadrature_options
@output_option
@click.pass_context
def variance(ctx, mass, kT, hbar, xi, testfn, weight, compare, k_max, rel_tol, output):
    """Print σ² = ∫ d³k/(2π)³ w(k)|f̃(k)|² for one test function."""
    quad = QuadratureSpec(k_max=k_max, rel_tol=rel_tol)
    f = parse_test_function(testfn)
    reg = parse_regularizer(xi, mass, kT, hbar)

    weights = {"classical": SpectralWeight.classical(reg), "quantum": SpectralWeight.quantum(hbar=hbar, mass=mass)}
    names = list(weights) if compare else [weight]
    values = {name: smeared_variance(f, weights[name], quad) for name in names}
    rows = [("variance", values[weight])]
    if compare:
        quantum, classical = values["quantum"], values["classical"]
        rows += [
            ("quantum", quantum),
            ("classical", classical),
            ("relative_difference", abs(classical - quantum) / abs(quantum)),
        ]
    write_csv(ctx, ("quantity", "value"), rows, output)
